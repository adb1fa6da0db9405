"""Command-line surface: polynomial parser, report builders, verifier."""

from .app import main
from .parse import parse_poly
from .reports import cmd_analyze, cmd_h2, cmd_hodge, cmd_lie, cmd_permgrp, cmd_synthesize, make_report
from .verify import verify_certificate, verify_payload

__all__ = [
    "main",
    "parse_poly",
    "cmd_analyze",
    "cmd_synthesize",
    "cmd_hodge",
    "cmd_h2",
    "cmd_lie",
    "cmd_permgrp",
    "make_report",
    "verify_certificate",
    "verify_payload",
]
