"""Command-line front end.

Commands: trees, posets, poly, maximin, verify.  JSON is the canonical
machine output; exit codes are 0 (success), 1 (verification failure),
2 (usage or input error).  The seed resolves from --seed, then the
GTSEC_SEED environment variable, then fresh OS entropy, and is always
echoed in the output.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from pathlib import Path

from . import verify as verify_mod
from .gaussian import WeightedTree, parse_weighted_tree, sample_weights
from .leaders import census_to_csv, leader_census
from .polynomials import alpha_beta, unrooted_poly
from .posets import build_all_posets, export_poset
from .security import maximin_exhaustive, maximin_restricted
from .trees import MAX_ORDER, canonical_code, enumerate_trees, parse_tree, path, spider, star

__all__ = ["main"]


def _builtin_tree(name: str):
    parts = name.split("-")
    try:
        if parts[0] == "path" and len(parts) == 2:
            return path(int(parts[1]))
        if parts[0] == "star" and len(parts) == 2:
            return star(int(parts[1]))
        if parts[0] == "spider" and len(parts) >= 3:
            return spider(*(int(p) for p in parts[1:]))
    except ValueError as exc:
        raise ValueError(f"bad builtin {name!r}: {exc}") from None
    raise ValueError(
        f"unknown builtin {name!r}; use path-N, star-N (N leaves), or spider-a-b-..."
    )


def _load_tree(args):
    if getattr(args, "builtin", None):
        return _builtin_tree(args.builtin)
    if getattr(args, "tree_file", None):
        return parse_tree(Path(args.tree_file).read_text())
    raise ValueError("provide --builtin or --tree-file")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("GTSEC_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"GTSEC_SEED must be an integer, got {env!r}") from None
    return secrets.randbits(32)


def _cmd_trees(args) -> int:
    ts = enumerate_trees(args.n)
    if args.format == "json":
        payload = [
            {"code": canonical_code(t).hex(), "n": t.n, "edges": [list(e) for e in t.edges]}
            for t in ts
        ]
        print(json.dumps({"n": args.n, "count": len(ts), "trees": payload}, indent=2))
    else:
        print(f"{len(ts)} non-isomorphic trees of order {args.n}")
        for t in ts:
            edges = " ".join(f"{u}-{v}" for u, v in t.edges)
            print(f"  {canonical_code(t).hex()}  {edges}")
    return 0


def _cmd_posets(args) -> int:
    posets, coverage = build_all_posets(args.n)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    ext = "dot" if args.format == "dot" else "json"
    files = []
    for idx, p in enumerate(posets, start=1):
        fname = outdir / f"poset_{args.n}_{idx}.{ext}"
        fname.write_text(export_poset(p, args.format))
        files.append(str(fname))
    summary = {
        "n": args.n,
        "posets": len(posets),
        "sizes": coverage.sizes,
        "all_covered": coverage.all_covered,
        "disjoint": coverage.disjoint,
        "files": files,
    }
    print(json.dumps(summary, indent=2))
    return 0


def _cmd_poly(args) -> int:
    t = _load_tree(args)
    poly = unrooted_poly(t)
    ab = alpha_beta(t) if t.n >= 3 else None
    if args.format == "json":
        payload = {
            "code": canonical_code(t).hex(),
            "poly": json.loads(poly.to_json()),
            "poly_text": str(poly),
        }
        if ab:
            payload.update(alpha=ab.alpha, beta=ab.beta, internal_edges=ab.internal_edges)
        print(json.dumps(payload, indent=2))
    else:
        print(f"f = {poly}")
        if ab:
            print(f"alpha={ab.alpha} beta={ab.beta} internal_edges={ab.internal_edges}")
    return 0


def _cmd_maximin(args) -> int:
    seed = _resolve_seed(args)
    if args.tree_file and not args.builtin:
        text = Path(args.tree_file).read_text()
        first_data_line = next(
            (ln for ln in text.splitlines()[1:] if ln.strip()), ""
        )
        if args.weights is None and len(first_data_line.split()) == 3:
            wt = parse_weighted_tree(text)
        else:
            t = parse_tree(text)
            wt = None
    else:
        t = _load_tree(args)
        wt = None
    if wt is None:
        if args.weights is not None:
            wt = WeightedTree.uniform(t, args.weights)
        else:
            wt = sample_weights(t, args.k, seed)
    report = maximin_exhaustive(wt) if args.exhaustive else maximin_restricted(wt)
    payload = report.to_json()
    payload.update(seed=seed, k=args.k, n=wt.tree.n, code=canonical_code(wt.tree).hex())
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args) -> int:
    seed = _resolve_seed(args)
    name = args.suite
    kwargs = {}
    if name == "grafting":
        kwargs = {"n_max": args.n or 7, "trials": args.trials, "k": args.k, "seed": seed}
    elif name == "cutpaste":
        kwargs = {"trials": args.trials, "k": args.k, "seed": seed}
    elif name == "determinant":
        kwargs = {"n_max": args.n or 10, "draws": args.trials, "seed": seed}
    elif name == "recursion":
        kwargs = {"n_max": args.n or 8}
    elif name == "distinctness":
        kwargs = {"n_max": args.n or 8}
    elif name == "confluence":
        kwargs = {"n_max": args.n or 9, "seed": seed}
    elif name == "leaders":
        kwargs = {"n_max": args.n or 12}
    report = verify_mod.SUITES[name](**kwargs)
    status = "PASS" if report.passed else "FAIL"
    print(f"[{status}] {report.suite}: {report.summary}")
    payload = report.to_json()
    payload["seed"] = seed
    print(json.dumps(payload, indent=2, default=str))
    return 0 if report.passed else 1


def _cmd_census(args) -> int:
    rows = leader_census(args.n_min, args.n_max)
    print(census_to_csv(rows), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtsec",
        description="Explore the security ordering of Gaussian tree models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trees = sub.add_parser("trees", help="list non-isomorphic trees of an order")
    p_trees.add_argument("--n", type=int, required=True, help=f"order, 2..{MAX_ORDER}")
    p_trees.add_argument("--format", choices=["text", "json"], default="text")
    p_trees.set_defaults(func=_cmd_trees)

    p_posets = sub.add_parser("posets", help="build all grafting posets of an order")
    p_posets.add_argument("--n", type=int, required=True, help="order, 4..12")
    p_posets.add_argument("--format", choices=["json", "dot"], default="json")
    p_posets.add_argument("--out", default=".", help="output directory for poset files")
    p_posets.set_defaults(func=_cmd_posets)

    p_poly = sub.add_parser("poly", help="subtree polynomial and alpha/beta of a tree")
    p_poly.add_argument("--builtin", help="path-N, star-N (N leaves), spider-a-b-...")
    p_poly.add_argument("--tree-file", help="tree in the 'n / u v' text format")
    p_poly.add_argument("--format", choices=["text", "json"], default="text")
    p_poly.set_defaults(func=_cmd_poly)

    p_max = sub.add_parser("maximin", help="maximin security value of a weighted tree")
    p_max.add_argument("--builtin")
    p_max.add_argument("--tree-file", help="'n / u v' or weighted 'n / u v w' format")
    p_max.add_argument("--weights", type=float, help="uniform weight override")
    p_max.add_argument("--k", type=float, default=0.5, help="determinant target for sampling")
    p_max.add_argument("--seed", type=int)
    group = p_max.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", default=True)
    group.add_argument(
        "--restricted", dest="exhaustive", action="store_false",
        help="adjacent-pair search instead of the full triplet scan",
    )
    p_max.set_defaults(func=_cmd_maximin)

    p_verify = sub.add_parser("verify", help="run a named verification sweep")
    p_verify.add_argument("--suite", required=True, choices=sorted(verify_mod.SUITES))
    p_verify.add_argument("--n", type=int, help="order bound for the sweep")
    p_verify.add_argument("--trials", type=int, default=10_000)
    p_verify.add_argument("--k", type=float, default=0.5)
    p_verify.add_argument("--seed", type=int)
    p_verify.set_defaults(func=_cmd_verify)

    p_census = sub.add_parser("census", help="leader census CSV over a range of orders")
    p_census.add_argument("--n-min", type=int, default=4)
    p_census.add_argument("--n-max", type=int, default=9)
    p_census.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
