"""Command line entry point: ``flagcollapse <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict

from .collapse import STRATEGIES, collapse_to_dim
from .complex import DEFAULT_FACE_BUDGET, CliqueComplex, clique_complex
from .condition import check_condition, prefilter_condition
from .experiment import ExperimentConfig, run_sweep, summarize, write_results
from .homology import homology_profile
from .io import load_clique_complex, load_face_lists, write_complex_json, write_edge_list
from .sampler import SamplerConfig, sample_gnp
from .verify import FingerprintMismatch, verify_certificate


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_sample(args) -> int:
    if args.p is not None:
        cfg = SamplerConfig(args.n, args.p, args.seed)
    else:
        cfg = SamplerConfig.from_alpha(args.n, args.alpha, args.seed)
    g = sample_gnp(cfg)
    if args.out.endswith(".json"):
        write_complex_json(clique_complex(g, budget=args.budget), args.out)
    else:
        write_edge_list(g, args.out)
    _emit({"n": g.n, "p": cfg.p, "seed": cfg.seed, "edges": g.num_edges, "out": args.out})
    return 0


def cmd_check(args) -> int:
    c = load_clique_complex(args.input, budget=args.budget)
    rep = prefilter_condition(c, args.k) if args.mode == "prefilter" else check_condition(c, args.k)
    _emit(rep.to_json())
    return 0


def cmd_collapse(args) -> int:
    c = load_clique_complex(args.input, budget=args.budget)
    out = collapse_to_dim(c, args.k, args.strategy, budget=args.budget)
    result = {"status": out.status, "strategy": out.strategy, "k": out.k, "f_vector": list(c.f_vector)}
    if out.success:
        result.update(steps=len(out.certificate.steps), final_dim=out.certificate.final_dim)
        if args.cert_out:
            out.certificate.dump(args.cert_out)
            result["certificate"] = args.cert_out
    elif out.witness is not None:
        result["witness"] = out.witness.to_json()
    _emit(result)
    return 0 if out.success else 2


def cmd_verify(args) -> int:
    c: CliqueComplex = load_clique_complex(args.input, budget=args.budget)
    with open(args.cert) as fh:
        cert = json.load(fh)
    try:
        verdict = verify_certificate(c, cert)
    except FingerprintMismatch as exc:
        _emit({"pass": False, "failed_step": None, "reason": str(exc)})
        return 1
    _emit(verdict.to_json())
    return 0 if verdict.ok else 1


def cmd_homology(args) -> int:
    layers = load_face_lists(args.input, budget=args.budget)
    _emit(homology_profile(layers, args.max_dim).to_json())
    return 0


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig.from_file(args.config)
    records = run_sweep(cfg, workers=args.workers)
    summary = summarize(records, cfg.k)
    write_results(records, summary, args.out_dir, cfg)
    _emit([asdict(s) for s in summary])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flagcollapse", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    ap.add_argument("--budget", type=int, default=DEFAULT_FACE_BUDGET, help="face-count budget")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample G(n,p) as an edge list (or .json complex)")
    p.add_argument("--n", type=int, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--p", type=float)
    grp.add_argument("--alpha", type=float)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check", help="decide the degree condition")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "prefilter"), default="exact")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("collapse", help="collapse to dimension <= k and write a certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="theorem")
    p.add_argument("--cert-out")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("homology", help="integer homology profile")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--max-dim", type=int)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("experiment", help="Monte Carlo sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
