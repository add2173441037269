"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 validation failure.
Results go to standard output (or --out); diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .core import (
    KINDS,
    ORIENTATIONS,
    SCHEMES,
    StudyConfig,
    WEIGHTINGS,
    list_pairs_for,
    run_study,
)
from .errors import PtracError
from .inventory import FEATURES, parse_inventory, featural_pairs
from .lexicon import parse_lexicon, tokenize_transcription
from .oracle import oracle_matrix
from .report import FORMATS, RenderSpec, render
from .syllabifier import format_syllables, syllabify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    p = _Parser(prog="ptrac", description=__doc__)
    p.add_argument("--version", action="version", version="ptrac %s" % __version__)
    sub = p.add_subparsers(dest="command", required=True)

    sy = sub.add_parser("syllabify", help="syllabify words or a lexicon")
    sy.add_argument("--inventory", required=True)
    sy.add_argument("--lexicon")
    sy.add_argument("words", nargs="*")

    pr = sub.add_parser("pairs", help="list featural minimal pairs")
    pr.add_argument("--inventory", required=True)
    pr.add_argument("--feature", choices=FEATURES)
    pr.add_argument("--orientation", choices=ORIENTATIONS, default="unordered")

    an = sub.add_parser("analyze", help="run a study and render the matrix")
    an.add_argument("--inventory", required=True)
    an.add_argument("--lexicon", required=True)
    an.add_argument("--study", required=True, choices=KINDS)
    an.add_argument("--weighting", choices=WEIGHTINGS, default="type-frequency")
    an.add_argument("--orientation", choices=ORIENTATIONS, default="unordered")
    an.add_argument("--aggregate", choices=SCHEMES, default="frame")
    an.add_argument("--format", choices=FORMATS, default="csv")
    an.add_argument("--feature", choices=FEATURES)
    an.add_argument("--out")
    an.add_argument("--strict", action="store_true",
                    help="treat lexicon diagnostics as fatal")
    an.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    lp = sub.add_parser("list-pairs", help="drill into one feature/context")
    lp.add_argument("--inventory", required=True)
    lp.add_argument("--lexicon", required=True)
    lp.add_argument("--study", required=True, choices=KINDS)
    lp.add_argument("--feature", required=True, choices=FEATURES)
    lp.add_argument("--context", required=True)
    lp.add_argument("--scheme", choices=SCHEMES, default="frame")
    lp.add_argument("--limit", type=int, default=5)
    return p


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_inventory(path):
    return parse_inventory(_read(path))


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_syllabify(args):
    inv = _load_inventory(args.inventory)
    failures = 0
    if args.lexicon:
        lex, diags = parse_lexicon(_read(args.lexicon), inv)
        for d in diags:
            print("warning: %s" % d, file=sys.stderr)
        items = [(e.orthography, e.transcription) for e in lex.entries]
    else:
        if not args.words:
            print("ptrac syllabify: give words or --lexicon", file=sys.stderr)
            return EXIT_USAGE
        items = []
        for w in args.words:
            try:
                items.append((w, tokenize_transcription(w, inv)))
            except PtracError as exc:
                print("error: %s: %s" % (w, exc), file=sys.stderr)
                failures += 1
    for label, seq in items:
        try:
            print(format_syllables(syllabify(seq, inv)))
        except PtracError as exc:
            print("error: %s: %s" % (label, exc), file=sys.stderr)
            failures += 1
    return EXIT_VALIDATION if failures else EXIT_OK


def _cmd_pairs(args):
    inv = _load_inventory(args.inventory)
    features = (args.feature,) if args.feature else FEATURES
    for feature in features:
        for a, b in featural_pairs(inv, feature, args.orientation):
            print("%s %s %s" % (a, b, feature))
    return EXIT_OK


def _cmd_analyze(args):
    inv = _load_inventory(args.inventory)
    lex, diags = parse_lexicon(_read(args.lexicon), inv, strict=args.strict)
    for d in diags:
        print("warning: %s" % d, file=sys.stderr)
    cfg = StudyConfig(kind=args.study, weighting=args.weighting,
                      orientation=args.orientation, feature=args.feature)
    if args.oracle:
        matrix = oracle_matrix(lex, inv, cfg)
        excluded = []
    else:
        report = run_study(lex, inv, cfg)
        matrix = report.matrix
        excluded = report.excluded
    for ex in excluded:
        print("warning: entry %d (%s) excluded: %s"
              % (ex.index, ex.orthography, ex.reason), file=sys.stderr)
    spec = RenderSpec(format=args.format, scheme=args.aggregate, out=args.out)
    meta = {"diagnostics": len(diags) + len(excluded),
            "weighting": cfg.weighting, "orientation": cfg.orientation}
    _emit(render(matrix, spec, inv=inv, meta=meta), args.out)
    return EXIT_OK


def _cmd_list_pairs(args):
    inv = _load_inventory(args.inventory)
    lex, diags = parse_lexicon(_read(args.lexicon), inv)
    for d in diags:
        print("warning: %s" % d, file=sys.stderr)
    cfg = StudyConfig(kind=args.study)
    report = run_study(lex, inv, cfg)
    rows = list_pairs_for(report.pairs, args.feature, args.context, lex, inv,
                          cfg, scheme=args.scheme, limit=args.limit)
    for row in rows:
        p = row.pair
        wit = " ".join("(%s, %s)" % w for w in row.witnesses)
        print("%s\t%s\t%s\t%s\t%d\t%s"
              % ("".join(p.seq_a), "".join(p.seq_b), p.frame, p.feature,
                 p.weight, wit))
    return EXIT_OK


_COMMANDS = {
    "syllabify": _cmd_syllabify,
    "pairs": _cmd_pairs,
    "analyze": _cmd_analyze,
    "list-pairs": _cmd_list_pairs,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except PtracError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION


def main():
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
