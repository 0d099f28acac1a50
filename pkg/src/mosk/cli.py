"""Command-line front end.

Commands: ``gallery`` (list registry entries), ``certify`` (class
certification with JSON output), ``split`` (PR/DR/FB runs with CSV traces),
``witness`` (witness-sequence dumps), ``selfdual`` (the verdict triptych).

Exit codes: 0 success, 1 usage error, 2 a class was refuted (certify) or a
run did not converge under ``--expect-converge`` (split), 3 numerical
failure.  ``MOSK_SEED`` provides the default seed.  Identical configuration
(including the seed) produces byte-identical JSON/CSV output; every emitted
file embeds the resolved configuration.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

import numpy as np

from . import certify as cert
from . import gallery, split
from .core import minty_sample, resolvent_map, reflected_map
from .exceptions import DomainError, MoskError, StepSizeOutOfRange, UnsupportedOperator
from .gallery import cone_subdiff_witnesses, staircase_witnesses

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_NUMERICAL = 3

MAP_CLASSES = {
    "nonexpansive": cert.certify_lipschitz,
    "banach-contraction": cert.certify_banach_contraction,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract
    # reserves 2 for refutations, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _float_list(text: str):
    try:
        return [float(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _parse_x0(text: str, dim: int) -> np.ndarray:
    if text.startswith("e") and text[1:].isdigit():
        k = int(text[1:])
        if not 1 <= k <= dim:
            raise DomainError(f"basis index e{k} outside 1..{dim}")
        x = np.zeros(dim)
        x[k - 1] = 1.0
        return x
    vals = np.array(_float_list(text), dtype=float)
    if vals.size == 1 and dim > 1:
        return np.full(dim, float(vals[0]))
    if vals.size != dim:
        raise DomainError(f"x0 has {vals.size} coordinates, operator dim is {dim}")
    return vals


def _default_seed() -> int:
    return int(os.environ.get("MOSK_SEED", "0"))


def _write_json(path: Optional[str], payload: dict):
    """Write the payload; returns the stream the one-line summary should use
    (stderr when the JSON itself went to stdout)."""
    text = json.dumps(payload, sort_keys=True, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return sys.stdout
    print(text)
    return sys.stderr


def _sampler(args, dim: int) -> cert.SamplerConfig:
    lo, hi = args.box
    return cert.SamplerConfig(
        seed=args.seed,
        sample_count=args.samples,
        box_low=np.full(dim, lo),
        box_high=np.full(dim, hi),
    )


def _entry_map(name: str, dim: Optional[int]):
    e = gallery.entry(name)
    if e.make_map is not None:
        return gallery.mapping(name, dim)
    return reflected_map(gallery.operator(name, dim))


def cmd_gallery(args) -> int:
    rows = []
    for name in gallery.names():
        e = gallery.entry(name)
        rows.append(
            {
                "name": name,
                "kinds": list(e.kinds),
                "dim": ("parametric" if e.parametric_dim else e.default_dim),
                "summary": e.summary,
            }
        )
    if args.json:
        _write_json(args.json, {"schema": 1, "command": "gallery", "entries": rows})
    else:
        for row in rows:
            kinds = ",".join(row["kinds"])
            print(f"{row['name']:<18} {str(row['dim']):<10} {kinds:<26} {row['summary']}")
    print(f"gallery: {len(rows)} entries")
    return EXIT_OK


def _certify_dispatch(args):
    name = args.op
    dim = args.dim
    klass = args.klass
    if klass in MAP_CLASSES:
        T = _entry_map(name, dim)
        return MAP_CLASSES[klass](T, _sampler(args, T.dim))
    if klass == "firmly-nonexpansive":
        e = gallery.entry(name)
        if e.make_operator is not None:
            target = resolvent_map(gallery.operator(name, dim))
        else:
            target = _entry_map(name, dim)
        return cert.certify_firm(target, _sampler(args, target.dim))
    if klass == "averaged":
        T = _entry_map(name, dim)
        return cert.certify_averaged(T, args.alpha, _sampler(args, T.dim))
    if klass == "contraction-large-distances":
        T = _entry_map(name, dim)
        eps = args.eps or args.t or [0.5, 1.0, 2.0, 4.0]
        return cert.certify_cld(T, eps, _sampler(args, T.dim))
    if klass == "uniformly-monotone":
        A = gallery.operator(name, dim)
        t = args.t or [0.5, 1.0, 2.0, 4.0]
        est = cert.estimate_modulus(A, t, _sampler(args, A.dim))
        return est.certificate(_sampler(args, A.dim).describe())
    if klass == "strongly-monotone":
        A = gallery.operator(name, dim)
        return cert.certify_strongly_monotone(A, _sampler(args, A.dim))
    if klass in ("strongly-nonexpansive", "super-strongly-nonexpansive"):
        T = _entry_map(name, dim)
        mode = "sne" if klass == "strongly-nonexpansive" else "ssne"
        rng = np.random.default_rng(args.seed)
        families = []
        if name == "staircase":
            families.append(gallery.witnesses("staircase"))
        for i in range(4):
            u = rng.standard_normal(T.dim)
            u /= max(np.linalg.norm(u), 1e-300)
            c = rng.uniform(0.5, 2.0) * rng.standard_normal(T.dim)
            families.append(cert.scaled_pair_family(u, c, name=f"scaled-{i}", n_cap=40))
        reports = [cert.check_sequential(T, fam, mode, n_max=40) for fam in families]
        refuted = any(r.refuted for r in reports)
        return cert.ClassCertificate(
            class_name=klass,
            params={"families": [r.family for r in reports]},
            estimates=[
                {"probe": float(i), "value": r.observed["premise_tail_max"]}
                for i, r in enumerate(reports)
            ],
            verdict=cert.REFUTED if refuted else cert.CONSISTENT,
            witness=None,
            witness_value=None,
            seed=args.seed,
            sample_count=args.samples,
            notes="sequential probe over witness families",
        )
    if klass in ("coercive", "growth-condition"):
        if name == "cone-subdiff":
            growth_pairs = [cone_subdiff_witnesses(n) for n in range(1, 201)]
            coercive_samples = [p[0] for p in growth_pairs] + [p[1] for p in growth_pairs]
        else:
            A = gallery.operator(name, dim)
            scfg = _sampler(args, A.dim)
            Z1, Z2 = cert.pair_batches(scfg)
            g1, g2 = minty_sample(A, Z1), minty_sample(A, Z2)
            growth_pairs = (g1, g2)
            coercive_samples = cert.GraphSample(
                np.concatenate([g1.x, g2.x]), np.concatenate([g1.xstar, g2.xstar])
            )
        if klass == "coercive":
            rep = cert.check_coercive(coercive_samples)
            ok = rep.increasing
            estimates = [
                {"probe": float(e), "value": (None if not np.isfinite(v) else float(v))}
                for e, v in zip(rep.shell_edges[1:], rep.shell_mins)
            ]
        else:
            rep = cert.check_growth(growth_pairs)
            ok = rep.growth_holds
            estimates = [{"probe": 0.9, "value": rep.top_decile_inf}]
        return cert.ClassCertificate(
            class_name=klass,
            params={},
            estimates=estimates,
            verdict=cert.CONSISTENT if ok else cert.REFUTED,
            witness=None,
            witness_value=None,
            seed=args.seed,
            sample_count=args.samples,
        )
    raise DomainError(f"unknown class {klass!r}")


def cmd_certify(args) -> int:
    certificate = _certify_dispatch(args)
    payload = {
        "schema": 1,
        "command": "certify",
        "config": {
            "op": args.op,
            "class": args.klass,
            "dim": args.dim,
            "seed": args.seed,
            "samples": args.samples,
            "box": list(args.box),
            "t": args.t,
            "eps": args.eps,
            "alpha": args.alpha,
        },
        "certificate": certificate.to_json_dict(),
    }
    e = gallery.entry(args.op)
    if e.make_operator is not None:
        payload["declaration"] = cert.compare_with_declaration(
            gallery.operator(args.op, args.dim), certificate
        )
    stream = _write_json(args.out, payload)
    print(f"certify {args.op} {args.klass}: {certificate.verdict}", file=stream)
    return EXIT_REFUTED if certificate.verdict == cert.REFUTED else EXIT_OK


def cmd_split(args) -> int:
    A = gallery.operator(args.opA, args.dim)
    B = gallery.operator(args.opB, args.dim)
    stop = split.StoppingRule(max_iter=args.max_iter, tol_residual=args.tol)
    x0 = _parse_x0(args.x0, A.dim)
    probes = list(range(min(args.probes, A.dim))) if args.probes else None
    if args.algo == "pr":
        trace = split.peaceman_rachford(A, B, x0, stop, probe_coords=probes)
    elif args.algo == "dr":
        trace = split.douglas_rachford(A, B, x0, stop, probe_coords=probes)
    else:
        if args.gamma is None:
            raise DomainError("--gamma is required for the fb algorithm")
        trace = split.forward_backward(A, B, args.gamma, x0, stop, probe_coords=probes)
    config = {
        "schema": 1,
        "command": "split",
        "algo": args.algo,
        "opA": args.opA,
        "opB": args.opB,
        "dim": args.dim,
        "gamma": args.gamma,
        "x0": args.x0,
        "max_iter": args.max_iter,
        "tol": args.tol,
        "probes": args.probes,
    }
    if args.out:
        trace.write_csv(args.out, config=config)
    final_res = trace.residuals[-1] if len(trace.residuals) else float("nan")
    print(
        f"split {args.algo}: termination={trace.termination} steps={trace.n_steps} "
        f"final_residual={final_res:.3e} period2={trace.period2}"
    )
    if args.expect_converge and trace.termination != split.TERM_CONVERGED:
        return EXIT_REFUTED
    return EXIT_OK


def cmd_witness(args) -> int:
    rows = []
    if args.example == "staircase-ssne":
        header = ["n", "x_1", "x_2", "y_1", "y_2", "d_n", "g_n"]
        for n in range(1, args.n + 1):
            x, y, d, g = staircase_witnesses(n)
            rows.append([n, x[0], x[1], y[0], y[1], d, g])
    elif args.example == "cone-subdiff-growth":
        header = ["n", "x_1", "x_2", "y_1", "y_2", "xstar_1", "xstar_2", "ratio", "coercivity_probe"]
        for n in range(1, args.n + 1):
            first, second = cone_subdiff_witnesses(n)
            dist = float(np.linalg.norm(first.x - second.x))
            ratio = float(np.linalg.norm(first.xstar - second.xstar)) / dist
            probe = float(np.dot(first.xstar, first.x) / np.dot(first.x, first.x))
            rows.append(
                [n, *first.x, *second.x, *first.xstar, ratio, probe]
            )
    else:
        raise DomainError(f"unknown witness example {args.example!r}")
    config = {"schema": 1, "command": "witness", "example": args.example, "n": args.n}
    out = args.out or f"{args.example}.csv"
    with open(out, "w", newline="", encoding="utf-8") as fh:
        fh.write("# " + json.dumps(config, sort_keys=True) + "\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [row[0]] + [f"{float(v):.17g}" for v in row[1:]]
            )
    print(f"witness {args.example}: wrote {len(rows)} rows to {out}")
    return EXIT_OK


def cmd_selfdual(args) -> int:
    A = gallery.operator(args.op, args.dim)
    scfg = _sampler(args, A.dim)
    report = cert.check_selfdual(A, scfg, t_list=args.t or (0.5, 1.0, 2.0, 4.0),
                                 eps_list=args.eps or (0.5, 1.0, 2.0, 4.0))
    payload = {
        "schema": 1,
        "command": "selfdual",
        "config": {
            "op": args.op,
            "dim": args.dim,
            "seed": args.seed,
            "samples": args.samples,
            "box": list(args.box),
        },
        "report": report.to_json_dict(),
    }
    stream = _write_json(args.out, payload)
    v = report.verdicts
    print(
        f"selfdual {args.op}: A={v[0]} A^-1={v[1]} R_A-cld={v[2]} "
        f"agrees={report.agrees}",
        file=stream,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mosk", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gallery", help="list registry entries")
    g.add_argument("--json", default=None, help="write the listing to a JSON file")
    g.set_defaults(func=cmd_gallery)

    c = sub.add_parser("certify", help="run a class certifier")
    c.add_argument("--op", required=True)
    c.add_argument("--class", dest="klass", required=True)
    c.add_argument("--dim", type=int, default=None)
    c.add_argument("--t", type=_float_list, default=None, help="shell radii, e.g. 0.5,1,2")
    c.add_argument("--eps", type=_float_list, default=None, help="CLD probes, e.g. 0.01,0.1,1")
    c.add_argument("--alpha", type=float, default=0.5)
    c.add_argument("--samples", type=int, default=100_000)
    c.add_argument("--seed", type=int, default=_default_seed())
    c.add_argument("--box", type=_float_list, default=[-50.0, 50.0])
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("split", help="run a splitting iteration")
    s.add_argument("--algo", choices=("pr", "dr", "fb"), required=True)
    s.add_argument("--opA", required=True)
    s.add_argument("--opB", required=True)
    s.add_argument("--dim", type=int, default=None)
    s.add_argument("--gamma", type=float, default=None)
    s.add_argument("--x0", required=True, help="comma-separated coordinates or e<k>")
    s.add_argument("--max-iter", type=int, default=100_000)
    s.add_argument("--tol", type=float, default=1e-10)
    s.add_argument("--probes", type=int, default=0, help="record the first k coordinates")
    s.add_argument("--out", default=None)
    s.add_argument("--expect-converge", action="store_true")
    s.set_defaults(func=cmd_split)

    w = sub.add_parser("witness", help="dump a witness sequence as CSV")
    w.add_argument("--example", required=True,
                   choices=("staircase-ssne", "cone-subdiff-growth"))
    w.add_argument("--n", type=int, default=20)
    w.add_argument("--out", default=None)
    w.set_defaults(func=cmd_witness)

    d = sub.add_parser("selfdual", help="self-duality verdict triptych")
    d.add_argument("--op", required=True)
    d.add_argument("--dim", type=int, default=None)
    d.add_argument("--t", type=_float_list, default=None)
    d.add_argument("--eps", type=_float_list, default=None)
    d.add_argument("--samples", type=int, default=100_000)
    d.add_argument("--seed", type=int, default=_default_seed())
    d.add_argument("--box", type=_float_list, default=[-50.0, 50.0])
    d.add_argument("--out", default=None)
    d.set_defaults(func=cmd_selfdual)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (StepSizeOutOfRange, UnsupportedOperator, DomainError) as exc:
        # configuration-level failures are usage errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MoskError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
