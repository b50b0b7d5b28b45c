"""
Command-line front end: `kschur expand | core | verify | walk`

- Rendered results go to stdout, logs to stderr
- main() returns the exit code: 0 ok, 1 usage, 2 domain, 3 verification failure
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import config
from .cartan import FAMILIES, build_cartan_datum
from .cores import core_of, core_to_dict, render_full, render_full_latex, render_shifted
from .errors import EXIT_OK, EXIT_VERIFICATION, ConfigurationError, KSchurError, exit_code_for
from .kschur import FORMULAS, expand
from .render import RENDERERS
from .verify import run_suites
from .walk import walk_figure
from .weyl import element_from_word, parse_word

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "latex", "svg")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting on bad usage."""

    def error(self, message):
        raise ConfigurationError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", required=True, choices=FAMILIES)
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None)

    parser = _Parser(prog="kschur", description="k-Schur elements of affine nilCoxeter algebras")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("expand", parents=[common], help="expand s_{z_Lambda_j} in the nilCoxeter basis")
    p.add_argument("--coweight", required=True, type=int, help="index j of Lambda_j check")
    p.add_argument("--formula", choices=FORMULAS + ("all",), default="orbit")

    p = sub.add_parser("core", parents=[common], help="symmetric 2k-core of a Grassmannian word")
    p.add_argument("--word", default="")

    p = sub.add_parser("verify", parents=[common], help="run the property suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("walk", parents=[common], help="SVG of a rank-2 alcove walk")
    p.add_argument("--word", default="")
    p.add_argument("--out", default=None)
    p.add_argument("--bound", type=int, default=None)
    return parser


# -------------------------
# Commands
# -------------------------

def cmd_expand(args, datum) -> int:
    if args.format == "svg":
        raise ConfigurationError("--format svg is only valid for the walk command")
    report = expand(datum, args.coweight, args.formula)
    sys.stdout.write(RENDERERS[args.format](report))
    return EXIT_OK


def cmd_core(args, datum) -> int:
    word = parse_word(args.word, datum)
    core = core_of(element_from_word(datum, word))
    k = datum.rank
    if args.format == "json":
        sys.stdout.write(json.dumps(core_to_dict(core), indent=2) + "\n")
    elif args.format == "latex":
        sys.stdout.write(render_full_latex(core, k) + "\n")
    elif args.format == "svg":
        raise ConfigurationError("--format svg is only valid for the walk command")
    else:
        lines = [str(core)]
        if core.parts:
            lines.extend(["", render_shifted(core, k), "", render_full(core, k)])
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, datum) -> int:
    seed = args.seed if args.seed is not None else config.default_seed()
    max_len = args.max_len if args.max_len is not None else config.default_max_len()
    results = run_suites(
        datum, seed, max_len,
        random_words_count=config.random_word_count(),
        commutation_samples=config.commutation_samples(),
    )
    for result in results:
        sys.stdout.write(result.line() + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        logger.error("%s: %d suite(s) failed", datum.name, len(failed))
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_walk(args, datum) -> int:
    if args.format not in ("svg", "text"):
        raise ConfigurationError(f"walk renders svg, not {args.format}")
    word = parse_word(args.word, datum)
    bound = args.bound if args.bound is not None else config.walk_bound()
    figure = walk_figure(datum, word.letters, bound)
    if args.out:
        try:
            figure.svg.save(args.out)
        except OSError as e:
            raise ConfigurationError(f"cannot write {args.out}: {e.strerror or e}") from e
        logger.info("walk figure written to %s", args.out)
    else:
        sys.stdout.write(figure.render())
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "core": cmd_core,
    "verify": cmd_verify,
    "walk": cmd_walk,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config.configure_logging(args.log_level)
        config.validate_env()
        datum = build_cartan_datum(args.family, args.rank)
        return COMMANDS[args.command](args, datum)
    except KSchurError as e:
        sys.stderr.write(f"kschur: {e}\n")
        if exit_code_for(e) == EXIT_VERIFICATION:
            logger.exception("verification failed")
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
