"""Command-line interface.

Subcommands:
  placto verify tables|cases|axioms|section5  -- run a verification family,
      emitting one JSON object per check (JSON lines) plus a summary object.
  placto insert --mode plactic|mixed WORD     -- insertion tableau + canonical word.
  placto class --relations R WORD             -- equivalence class listing.
  placto schur --shape 2,1 [--shifted] --n N  -- Schur-type word sum as JSON.
  placto lr --nu 2,1 --mu 1 --n N             -- product expansion coefficients.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .algebra import free_schur, lr_expand, shifted_free_schur
from .rewrite import (
    KNUTH,
    SHIFTED_KNUTH,
    RelationSet,
    class_dump,
    equiv_class,
    relation_set_by_name,
)
from .tableaux import (
    hook_factorization_check,
    mixed_insert_word,
    p_tableau,
    reading_word,
    strict_partitions,
)
from .words import Word


def _parse_shape(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "0":
        return ()
    return tuple(int(part) for part in text.split(","))


def _parse_relations(selector: str) -> RelationSet:
    if selector.startswith("custom:"):
        path = selector.split(":", 1)[1]
        with open(path, "r", encoding="utf-8") as handle:
            return RelationSet.from_json(handle.read())
    return relation_set_by_name(selector)


def _emit(reports: list[dict], json_path: str | None) -> int:
    passed = sum(1 for r in reports if r.get("pass", False))
    summary = {
        "check": "summary",
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "pass": passed == len(reports),
    }
    lines = [json.dumps(r, sort_keys=True) for r in reports + [summary]]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0 if summary["pass"] else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    what = args.what
    if what == "tables":
        reports = verify_mod.verify_tables()
    elif what == "cases":
        if args.relations:
            names = [args.relations]
        else:
            names = ["knuth", "shifted-knuth"]
        reports = []
        for name in names:
            reports.extend(verify_mod.verify_case_analysis(name))
    elif what == "axioms":
        n = args.n or 3
        degree = args.degree or 5
        reports = []
        rel_spec = args.relations
        if rel_spec is None:
            reports.extend(verify_mod.verify_axioms("plactic", n, degree))
            reports.extend(verify_mod.verify_axioms("shifted-plactic", n, degree))
            reports.append(verify_mod.restriction_surprise(n, min(degree, 4)))
        elif rel_spec == "knuth":
            reports.extend(verify_mod.verify_axioms("plactic", n, degree))
        elif rel_spec == "shifted-knuth":
            reports.extend(verify_mod.verify_axioms("shifted-plactic", n, degree))
            reports.append(verify_mod.restriction_surprise(n, min(degree, 4)))
        else:
            rels = _parse_relations(rel_spec)
            reports.extend(verify_mod.verify_axioms("plactic", n, degree, relations=rels))
    elif what == "section5":
        reports = verify_mod.verify_section5(args.n or 4, args.degree or 4)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(what)
    return _emit(reports, args.json)


def _canonical_hook_word(w: Word) -> Word | None:
    """Unique hook-factorization word in the shifted class of w, if any."""
    members = sorted(equiv_class(w, SHIFTED_KNUTH), key=lambda m: m.letters)
    hits = [
        m
        for m in members
        if any(hook_factorization_check(m, nu) for nu in strict_partitions(len(m)))
    ]
    return hits[0] if len(hits) == 1 else None


def _cmd_insert(args: argparse.Namespace) -> int:
    w = Word.parse(args.word, args.n)
    if args.mode == "plactic":
        tab = p_tableau(w)
        canonical = reading_word(tab, w.n)
        payload = {
            "mode": "plactic",
            "word": str(w),
            "tableau": tab.to_json(),
            "canonical_word": str(canonical),
        }
    else:
        tab = mixed_insert_word(w)
        hook = _canonical_hook_word(w)
        payload = {
            "mode": "mixed",
            "word": str(w),
            "tableau": tab.to_json(),
            "canonical_word": str(hook) if hook is not None else None,
        }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_class(args: argparse.Namespace) -> int:
    rels = _parse_relations(args.relations)
    w = Word.parse(args.word, args.n)
    print(json.dumps(class_dump(w, rels), sort_keys=True))
    return 0


def _cmd_schur(args: argparse.Namespace) -> int:
    shape = _parse_shape(args.shape)
    n = args.n
    degree = args.degree if args.degree is not None else sum(shape)
    poly = (
        shifted_free_schur(shape, n, degree)
        if args.shifted
        else free_schur(shape, n, degree)
    )
    print(json.dumps(poly.to_json(), sort_keys=True))
    return 0


def _cmd_lr(args: argparse.Namespace) -> int:
    nu = _parse_shape(args.nu)
    mu = _parse_shape(args.mu)
    coeffs = lr_expand(nu, mu, args.n)
    payload = {
        "nu": list(nu),
        "mu": list(mu),
        "n": args.n,
        "coefficients": {
            ",".join(str(p) for p in shape): coeff
            for shape, coeff in sorted(coeffs.items())
        },
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="placto",
        description="Plactic and shifted plactic monoid toolkit and verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification family")
    p_verify.add_argument("what", choices=["tables", "cases", "axioms", "section5"])
    p_verify.add_argument("--n", type=int, default=None, help="alphabet truncation size")
    p_verify.add_argument("--degree", type=int, default=None, help="degree bound")
    p_verify.add_argument(
        "--relations",
        default=None,
        help="knuth | shifted-knuth | custom:<file.json>",
    )
    p_verify.add_argument("--json", default=None, help="also write the report here")
    p_verify.set_defaults(func=_cmd_verify)

    p_insert = sub.add_parser("insert", help="insertion tableau of a word")
    p_insert.add_argument("--mode", choices=["plactic", "mixed"], required=True)
    p_insert.add_argument("--n", type=int, default=None)
    p_insert.add_argument("word")
    p_insert.set_defaults(func=_cmd_insert)

    p_class = sub.add_parser("class", help="equivalence class of a word")
    p_class.add_argument("--relations", default="knuth")
    p_class.add_argument("--n", type=int, default=None)
    p_class.add_argument("word")
    p_class.set_defaults(func=_cmd_class)

    p_schur = sub.add_parser("schur", help="Schur-type word sum")
    p_schur.add_argument("--shape", required=True, help="partition, e.g. 2,1")
    p_schur.add_argument("--shifted", action="store_true")
    p_schur.add_argument("--n", type=int, required=True)
    p_schur.add_argument("--degree", type=int, default=None)
    p_schur.set_defaults(func=_cmd_schur)

    p_lr = sub.add_parser("lr", help="expand a product of Schur sums in the quotient")
    p_lr.add_argument("--nu", required=True)
    p_lr.add_argument("--mu", required=True)
    p_lr.add_argument("--n", type=int, required=True)
    p_lr.set_defaults(func=_cmd_lr)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"placto: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
