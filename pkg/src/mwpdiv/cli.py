"""Command-line entry point: ``mwpdiv <command> ...``.

Exit codes: 0 success, 2 input or configuration error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .consistency import arithmetic_subset_filter, check_corpus
from .corpus import Corpus, CorpusError, k_fold_split
from .ingestion import LOADERS, load_corpus, save_canonical
from .normalization import AnnotationSidecar, normalize_problem
from .similarity import CHANNELS
from .textio import atomic_write, write_csv, write_json

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class ConfigError(ValueError):
    pass


def _unit_interval(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0 or math.isnan(v):
        raise argparse.ArgumentTypeError(f"{text} is outside [0, 1]")
    return v


def _non_negative_float(text: str) -> float:
    v = float(text)
    if not v >= 0.0:
        raise argparse.ArgumentTypeError(f"{text} must be >= 0")
    return v


def _non_negative_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} must be >= 0")
    return v


def _fold_count(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"fold count must be >= 2, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwpdiv",
        description="Lexical/syntactic diversity and annotation checks for math word problem corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def corpus_args(p, nargs=None):
        if nargs:
            p.add_argument("inputs", nargs=nargs, metavar="INPUT", type=Path)
        else:
            p.add_argument("input", type=Path)
        p.add_argument("--format", choices=sorted(LOADERS), default="canonical",
                       help="input corpus format (default: canonical)")

    def scoring_args(p):
        p.add_argument("--channel", choices=CHANNELS, default="lexical")
        p.add_argument("--smoothing", type=_non_negative_float, default=0.0,
                       help="constant replacing zero n-gram matches (default 0: unsmoothed)")
        p.add_argument("--threads", type=_non_negative_int, default=0, help="worker threads, 0 = all")
        p.add_argument("--sidecar", type=Path, help="JSONL with external tokens/pos/lemmas per id")

    def types_args(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--use-types", dest="use_types", action="store_true", default=True,
                       help="score within problem-type groups when annotated (default)")
        g.add_argument("--no-types", dest="use_types", action="store_false")

    p = sub.add_parser("diversity", help="per-problem scores, histogram and corpus mean")
    corpus_args(p)
    scoring_args(p)
    types_args(p)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("cross", help="test-vs-train diversity, or k-fold over one corpus")
    corpus_args(p, nargs="+")
    scoring_args(p)
    p.add_argument("--kfold", type=_fold_count, help="split the single input into K folds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("check", help="compare annotated equations/formulas with labeled answers")
    corpus_args(p)
    p.add_argument("--arith-only", action="store_true",
                   help="restrict to the arithmetic-only subset first and report both stages")
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("dedup", help="list problems whose nearest neighbour is too similar")
    corpus_args(p)
    scoring_args(p)
    types_args(p)
    p.add_argument("--threshold", type=_unit_interval, default=0.1,
                   help="flag scores below this value (default 0.1)")
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("normalize", help="dump normalized tokens and POS tags")
    corpus_args(p)
    p.add_argument("--sidecar", type=Path)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("convert", help="convert an adapter format to canonical JSONL")
    corpus_args(p)
    p.add_argument("--out", type=Path, required=True, help="output file")
    return parser


def _load(path: Path, fmt: str) -> Corpus:
    warnings: list[str] = []
    corpus = load_corpus(path, fmt, warnings)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return corpus


def _sidecar(args):
    path = getattr(args, "sidecar", None)
    return AnnotationSidecar.load(path) if path else None


def _fmt(v: float) -> str:
    return repr(float(v))


def _write_report(out: Path, report, extra: dict | None = None) -> None:
    from .diversity import bin_edges

    write_csv(out / "scores.csv", ("id", "score", "nearest_id"),
              ((pid, _fmt(score), nearest or "") for pid, score, nearest in report.rows()))
    write_csv(out / "histogram.csv", ("bin_low", "bin_high", "count"),
              ((_fmt(lo), _fmt(hi), c) for (lo, hi), c in zip(bin_edges(), report.histogram)))
    summary = report.summary()
    summary["group_sizes"] = list(report.group_sizes)
    if extra:
        summary.update(extra)
    write_json(out / "summary.json", summary)


def _print_scores(cld: float, zero_fraction: float) -> None:
    print(f"CLD {cld:.6f}")
    print(f"zero_fraction {zero_fraction:.6f}")


def cmd_diversity(args) -> int:
    from .diversity import corpus_diversity

    corpus = _load(args.input, args.format)
    report = corpus_diversity(corpus, args.channel, args.use_types, sidecar=_sidecar(args),
                              smoothing=args.smoothing)
    _write_report(args.out, report, {"input": str(args.input)})
    _print_scores(report.cld, report.zero_fraction)
    return EXIT_OK


def _normalized(corpus: Corpus, sidecar):
    return [normalize_problem(p, sidecar) for p in corpus]


def cmd_cross(args) -> int:
    from .diversity import cross_set_diversity, make_report

    sidecar = _sidecar(args)
    if args.kfold:
        if len(args.inputs) != 1:
            raise ConfigError("--kfold takes exactly one input")
        corpus = _load(args.inputs[0], args.format)
        if not len(corpus):
            raise CorpusError("empty corpus")
        split = k_fold_split(corpus, args.kfold, args.seed)
        for w in split.warnings:
            print(f"warning: {w}", file=sys.stderr)
        norm = {p.id: p for p in _normalized(corpus, sidecar)}
        folds, pooled = [], {}
        for f in range(args.kfold):
            test_ids = set(split.fold_ids(f))
            test = [norm[i] for i in norm if i in test_ids]
            train = [norm[i] for i in norm if i not in test_ids]
            if not test or not train:
                folds.append({"fold": f, "test": len(test), "train": len(train), "cld": None,
                              "zero_fraction": None})
                continue
            rep = cross_set_diversity(test, train, args.channel, smoothing=args.smoothing)
            pooled.update(rep.scores)
            folds.append({"fold": f, "test": len(test), "train": len(train), "cld": rep.cld,
                          "zero_fraction": rep.zero_fraction})
        scored = [fd for fd in folds if fd["cld"] is not None]
        if not scored:
            raise CorpusError("no fold has both a test and a training part")
        mean_cld = math.fsum(fd["cld"] for fd in scored) / len(scored)
        mean_zero = math.fsum(fd["zero_fraction"] for fd in scored) / len(scored)
        report = make_report(args.channel, pooled)
        write_csv(args.out / "folds.csv", ("fold", "test", "train", "cld", "zero_fraction"),
                  ((fd["fold"], fd["test"], fd["train"],
                    "" if fd["cld"] is None else _fmt(fd["cld"]),
                    "" if fd["zero_fraction"] is None else _fmt(fd["zero_fraction"])) for fd in folds))
        _write_report(args.out, report, {
            "input": str(args.inputs[0]), "folds": args.kfold, "seed": args.seed,
            "mean_fold_cld": mean_cld, "mean_fold_zero_fraction": mean_zero,
        })
        _print_scores(mean_cld, mean_zero)
        return EXIT_OK
    if len(args.inputs) != 2:
        raise ConfigError("cross needs TEST and TRAIN inputs, or one input with --kfold")
    test_c = _load(args.inputs[0], args.format)
    train_c = _load(args.inputs[1], args.format)
    if not len(test_c) or not len(train_c):
        raise CorpusError("empty corpus")
    report = cross_set_diversity(_normalized(test_c, sidecar), _normalized(train_c, sidecar),
                                 args.channel, smoothing=args.smoothing)
    _write_report(args.out, report, {"test": str(args.inputs[0]), "train": str(args.inputs[1])})
    _print_scores(report.cld, report.zero_fraction)
    return EXIT_OK


def cmd_check(args) -> int:
    corpus = _load(args.input, args.format)
    if not len(corpus):
        raise CorpusError("empty corpus")
    summary: dict = {"input": str(args.input)}
    records = list(corpus)
    if args.arith_only:
        subset = arithmetic_subset_filter(records)
        write_csv(args.out / "subset.csv", ("id", "eligible", "reasons"),
                  [(pid, "yes", "") for pid in subset.eligible]
                  + [(pid, "no", ";".join(r)) for pid, r in subset.excluded.items()])
        reason_counts: dict[str, int] = {}
        for reasons in subset.excluded.values():
            for r in reasons:
                reason_counts[r] = reason_counts.get(r, 0) + 1
        summary["filter"] = {"problems": len(records), "eligible": len(subset.eligible),
                             "excluded": len(subset.excluded), "reasons": reason_counts}
        keep = set(subset.eligible)
        records = [r for r in records if r.id in keep]
    report = check_corpus(records)
    write_csv(args.out / "check.csv", ("id", "status", "computed", "labeled"), report.rows())
    summary["check"] = report.summary()
    write_json(args.out / "summary.json", summary)
    if args.arith_only:
        print(f"eligible {summary['filter']['eligible']} of {len(corpus)}")
    for status, frac in report.fractions().items():
        print(f"{status} {frac:.6f}")
    return EXIT_OK


def cmd_dedup(args) -> int:
    from .diversity import dedup_report

    corpus = _load(args.input, args.format)
    flagged = dedup_report(corpus, args.channel, args.threshold, args.use_types,
                           sidecar=_sidecar(args), smoothing=args.smoothing)
    by_id = corpus.by_id()
    rows = []
    for s in flagged:
        nearest = by_id[s.nearest_id].text if s.nearest_id else ""
        rows.append((s.id, _fmt(s.score), s.nearest_id or "", by_id[s.id].text, nearest))
    write_csv(args.out / "dedup.csv", ("id", "score", "nearest_id", "text", "nearest_text"), rows)
    print(f"flagged {len(flagged)} of {len(corpus)} below {args.threshold}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    corpus = _load(args.input, args.format)
    sidecar = _sidecar(args)
    lines = []
    for p in corpus:
        n = normalize_problem(p, sidecar)
        lines.append(json.dumps({"id": n.id, "norm_tokens": list(n.norm_tokens),
                                 "pos_tokens": list(n.pos_tokens)}, ensure_ascii=False))
    atomic_write(args.out / "normalized.jsonl", "".join(line + "\n" for line in lines))
    print(f"normalized {len(lines)} problems")
    return EXIT_OK


def cmd_convert(args) -> int:
    corpus = _load(args.input, args.format)
    save_canonical(corpus, args.out)
    print(f"wrote {len(corpus)} problems to {args.out}")
    return EXIT_OK


COMMANDS = {
    "diversity": cmd_diversity, "cross": cmd_cross, "check": cmd_check,
    "dedup": cmd_dedup, "normalize": cmd_normalize, "convert": cmd_convert,
}


def _size_worker_pool(threads: int) -> None:
    # numba fixes its pool size on import, and --threads may exceed the core count
    if threads > 0 and "numba" not in sys.modules and "NUMBA_NUM_THREADS" not in os.environ:
        os.environ["NUMBA_NUM_THREADS"] = str(max(threads, os.cpu_count() or 1))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _size_worker_pool(getattr(args, "threads", 0))
    from . import _kernels
    from .diversity import InvariantError

    try:
        if hasattr(args, "threads"):
            _kernels.set_threads(args.threads)
        return COMMANDS[args.command](args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (CorpusError, ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
