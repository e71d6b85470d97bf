"""Command-line front end: identity suites, convergence sweeps, constants.

Commands
--------
verify           exact-identity suites (quotient identity, Toeplitz doubling,
                 Wiener-Hopf doubling, kernel-family equality, closed-form
                 cross-checks); exit 1 on any violation beyond tolerance
sweep-discrete   Toeplitz+-Hankel determinants vs their asymptotics over n
sweep-continuous truncated Wiener-Hopf+-Hankel determinants vs theirs over R
sech-lab         sech-symbol truncations vs the Akhiezer-Kac prediction
constants        E[phi_b], C_b and the asymptotic constants for a beta list

Exit codes: 0 ok, 1 tolerance violation, 2 invalid config, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import asymptotics, fredholm, structured, symbols, wienerhopf
from .asymptotics import AsymKind, AsymptoteSpec, asymptote_log
from .errors import WhdetError
from .logdet import LogDet, logdet, rel_exp_diff

CSV_HEADER = [
    "scale",
    "value_ln_abs",
    "value_arg",
    "asymptote_ln_abs",
    "asymptote_arg",
    "ratio_abs",
    "deviation",
]

CONSTANTS_HEADER = [
    "beta_re",
    "beta_im",
    "e_phi_re",
    "e_phi_im",
    "c_beta_re",
    "c_beta_im",
    "const_discrete_plus_re",
    "const_discrete_plus_im",
    "const_discrete_minus_re",
    "const_discrete_minus_im",
]


@dataclass
class RunConfig:
    command: str
    betas: List[complex] = field(default_factory=lambda: [0.25 + 0j])
    n_range: Optional[List[int]] = None
    r_range: Optional[List[float]] = None
    eps: float = 1e-3
    panels: Optional[int] = None
    nodes: int = 16
    trunc_N: int = 512
    seed: int = 0
    tol: float = 1e-6
    out: Optional[str] = None
    fmt: str = "csv"


def _parse_range_ints(text: str) -> List[int]:
    a, b, step = (int(p) for p in text.split(":"))
    if step <= 0 or b < a:
        raise ValueError(f"bad range {text}")
    return list(range(a, b + 1, step))


def _parse_range_floats(text: str) -> List[float]:
    a, b, step = (float(p) for p in text.split(":"))
    if step <= 0 or b < a:
        raise ValueError(f"bad range {text}")
    out = []
    x = a
    while x <= b + 1e-12:
        out.append(x)
        x += step
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whdet", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--command", required=True,
                   choices=["verify", "sweep-discrete", "sweep-continuous",
                            "sech-lab", "constants"])
    p.add_argument("--beta-re", type=float, action="append", default=None,
                   help="real part of a beta (repeatable)")
    p.add_argument("--beta-im", type=float, action="append", default=None,
                   help="imag part matching the corresponding --beta-re")
    p.add_argument("--n-range", type=str, default=None, help="a:b:step (integers)")
    p.add_argument("--r-range", type=str, default=None, help="a:b:step (floats)")
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--panels", type=int, default=None)
    p.add_argument("--nodes", type=int, default=16)
    p.add_argument("--trunc-N", type=int, default=512, dest="trunc_N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--format", type=str, choices=["csv", "json"], default="csv",
                   dest="fmt")
    return p


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    res = args.beta_re if args.beta_re is not None else [0.25]
    ims = args.beta_im if args.beta_im is not None else [0.0] * len(res)
    if len(ims) != len(res):
        raise ValueError("--beta-im count must match --beta-re count")
    cfg = RunConfig(
        command=args.command,
        betas=[complex(r, i) for r, i in zip(res, ims)],
        n_range=_parse_range_ints(args.n_range) if args.n_range else None,
        r_range=_parse_range_floats(args.r_range) if args.r_range else None,
        eps=args.eps,
        panels=args.panels,
        nodes=args.nodes,
        trunc_N=args.trunc_N,
        seed=args.seed,
        tol=args.tol,
        out=args.out,
        fmt=args.fmt,
    )
    if cfg.eps <= 0 or cfg.nodes < 2 or cfg.trunc_N < 4:
        raise ValueError("knobs must be positive (eps>0, nodes>=2, trunc-N>=4)")
    return cfg


def _row(scale: float, value: LogDet, asym: complex) -> dict:
    ratio = np.exp(value.log - asym)
    return {
        "scale": scale,
        "value_ln_abs": value.ln_abs,
        "value_arg": value.arg,
        "asymptote_ln_abs": asym.real,
        "asymptote_arg": asym.imag,
        "ratio_abs": float(abs(ratio)),
        "deviation": float(abs(ratio - 1.0)),
    }


def _check(rows: list, violations: list, name: str, measured: float, tol: float):
    """Record a residual as a table row; flag it when above tolerance."""
    rows.append({
        "scale": float(len(rows) + 1),
        "value_ln_abs": measured,
        "value_arg": 0.0,
        "asymptote_ln_abs": 0.0,
        "asymptote_arg": 0.0,
        "ratio_abs": 1.0 + measured,
        "deviation": measured,
    })
    if not measured <= tol:
        violations.append({"check": name, "measured": measured, "tol": tol})


def run_verify(cfg: RunConfig):
    """Exact identities at the configured tolerance; rows carry residuals."""
    rows, violations = [], []
    tol = cfg.tol

    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    for _ in range(100):
        dim = 8
        A = 0.05 * (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
        lhs, rhs = fredholm.quotient_identity(A, 3)
        worst = max(worst, abs(lhs.log - rhs.log))
    _check(rows, violations, "quotient-identity", worst, max(tol, 1e-11))

    for b in cfg.betas:
        ns = cfg.n_range or [4, 8]
        for n in ns:
            dm = structured.d_n(b, n, +1)
            de = structured.d_n_exact(b, n, +1)
            _check(rows, violations, f"d_n+({b},{n})", rel_exp_diff(dm, de), max(tol, 1e-8))
            dm = structured.d_n(b, n, -1)
            de = structured.d_n_exact(b, n, -1)
            _check(rows, violations, f"d_n-({b},{n})", rel_exp_diff(dm, de), max(tol, 1e-8))
            # Toeplitz doubling: det T_2n = D_n+ D_n-
            t2n = structured.logdet(structured.toeplitz(
                lambda k: symbols.fourier_coeff_v(b, k), 2 * n))
            prod = structured.d_n(b, n, +1) + structured.d_n(b, n, -1)
            _check(rows, violations, f"toeplitz-doubling({b},{n})",
                   rel_exp_diff(t2n, prod), max(tol, 1e-9))
        # regularized Hankel closed form
        for r in (0.5, 0.8):
            for sign in (+1, -1):
                got = structured.fredholm_det_hankel_reg(b, r, sign)
                want = structured.ln_det_hankel_reg_exact(b, r, sign)
                _check(rows, violations, f"hankel-reg({b},{r},{sign:+d})",
                       abs(np.exp(got.log - want) - 1.0), max(tol, 1e-8))
        # inverse-section route at the configured truncation
        if -0.5 < b.real < 0.5:
            # sign paired so the section converges at the fast rate
            sign = -1 if b.real >= 0 else +1
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                sec = structured.hankel_section_inverse_det(
                    -b, 4, sign, N=max(cfg.trunc_N, 32))
            _check(rows, violations, f"inverse-section({b})",
                   rel_exp_diff(sec.value, structured.d_n(-b, 4, sign)),
                   max(tol, 1e-3))
        # Wiener-Hopf doubling with matched quadrature
        sym = symbols.LineSymbol(symbols.LineKind.VHAT_EPS, beta=b, eps=cfg.eps)
        rule = wienerhopf.wh_rule(10.0, panels=cfg.panels, nodes=cfg.nodes)
        ldp = wienerhopf.det_wr_pm_hr(wienerhopf.TruncatedWH(sym, 10.0, rule, +1))
        ldm = wienerhopf.det_wr_pm_hr(wienerhopf.TruncatedWH(sym, 10.0, rule, -1))
        ld2 = wienerhopf.det_w2r(sym, 20.0, wienerhopf.reflected_union_rule(rule))
        _check(rows, violations, f"wh-doubling({b})",
               rel_exp_diff(ld2, ldp + ldm), max(tol, 1e-6))
        # kernel-family equality (discrete side)
        if abs(b.imag) < 1e-14 and -1 < b.real < 1 and b != 0:
            n0 = 2
            spec = fredholm.KernelSpec(fredholm.KernelFamily.KEPS_N,
                                       beta=b, n=n0, eps=1e-2)
            nys = fredholm.fredholm_logdet(fredholm.nystrom(spec), +1)
            r0 = (1 - 1e-2) / (1 + 1e-2)
            M = max(256, int(math.ceil(17.0 / -math.log(r0))))
            csym = symbols.CircleSymbol(symbols.CircleKind.UBETA_R, beta=b, r=r0)
            co = symbols.reg_coeff_table(csym, 2 * M + 2 * n0 + 2)[2 * M + 2 * n0 + 2:]
            co = co.real if abs(b.imag) < 1e-14 else co
            j, k = np.indices((M, M))
            H = co[j + k + 2 * n0 + 1]
            hd = logdet(np.eye(M, dtype=H.dtype) + H)
            _check(rows, violations, f"kernel-vs-section({b})",
                   abs(np.exp(nys.log - hd.log) - 1.0), max(tol, 1e-6))
    return rows, violations


def _sweep_rows(cfg: RunConfig, continuous: bool):
    rows, violations = [], []
    for b in cfg.betas:
        if continuous:
            scales = cfg.r_range or [10.0, 20.0, 40.0]
            for sign, kind in ((+1, AsymKind.CONTINUOUS_PLUS), (-1, AsymKind.CONTINUOUS_MINUS)):
                try:
                    spec = AsymptoteSpec(kind, b)
                except WhdetError:
                    continue  # beta outside this sign's strip
                sym = symbols.LineSymbol(symbols.LineKind.VHAT_EPS, beta=b, eps=cfg.eps)
                for R in scales:
                    rule = wienerhopf.wh_rule(R, panels=cfg.panels, nodes=cfg.nodes)
                    ld = wienerhopf.det_wr_pm_hr(wienerhopf.TruncatedWH(sym, R, rule, sign))
                    rows.append(_row(R, ld, asymptote_log(spec, R, eps=cfg.eps)))
        else:
            scales = cfg.n_range or [16, 32, 64]
            for sign, kind in ((+1, AsymKind.DISCRETE_PLUS), (-1, AsymKind.DISCRETE_MINUS)):
                try:
                    spec = AsymptoteSpec(kind, b)
                except WhdetError:
                    continue
                for n in scales:
                    ld = structured.d_n(b, n, sign)
                    rows.append(_row(float(n), ld, asymptote_log(spec, float(n))))
    return rows, violations


def run_sech_lab(cfg: RunConfig):
    rows, violations = [], []
    for b in cfg.betas:
        spec = AsymptoteSpec(AsymKind.SECH, b)
        sym = symbols.LineSymbol(symbols.LineKind.PHI, beta=b)
        for s in (cfg.r_range or [10.0, 20.0, 30.0]):
            rule = wienerhopf.wh_rule(s, panels=cfg.panels, nodes=cfg.nodes)
            ld = wienerhopf.det_w2r(sym, s, rule)
            rows.append(_row(s, ld, asymptote_log(spec, s)))
    return rows, violations


def run_constants(cfg: RunConfig):
    rows = []
    for b in cfg.betas:
        e_phi = wienerhopf.akhiezer_kac_E(b) if -1.5 < b.real < 0.5 else complex("nan")
        cb = asymptotics.c_beta(b) if -1.0 < b.real < 0.5 else complex("nan")
        cplus = np.exp(asymptote_log(AsymptoteSpec(AsymKind.DISCRETE_PLUS, b), 1.0))
        cminus = np.exp(asymptote_log(AsymptoteSpec(AsymKind.DISCRETE_MINUS, b), 1.0))
        rows.append({
            "beta_re": b.real, "beta_im": b.imag,
            "e_phi_re": e_phi.real, "e_phi_im": e_phi.imag,
            "c_beta_re": cb.real, "c_beta_im": cb.imag,
            "const_discrete_plus_re": complex(cplus).real,
            "const_discrete_plus_im": complex(cplus).imag,
            "const_discrete_minus_re": complex(cminus).real,
            "const_discrete_minus_im": complex(cminus).imag,
        })
    return rows, []


def write_output(cfg: RunConfig, rows: list, violations: list):
    header = CONSTANTS_HEADER if cfg.command == "constants" else CSV_HEADER
    if cfg.out is None:
        for row in rows:
            print(",".join(f"{row[h]:.17g}" for h in header))
        return
    if cfg.fmt == "json":
        doc = {
            "config": {
                "command": cfg.command,
                "betas": [[b.real, b.imag] for b in cfg.betas],
                "n_range": cfg.n_range,
                "r_range": cfg.r_range,
                "eps": cfg.eps,
                "panels": cfg.panels,
                "nodes": cfg.nodes,
                "trunc_N": cfg.trunc_N,
                "seed": cfg.seed,
                "tol": cfg.tol,
            },
            "rows": rows,
            "violations": violations,
        }
        with open(cfg.out, "w") as f:
            json.dump(doc, f, indent=1, sort_keys=True)
            f.write("\n")
    else:
        with open(cfg.out, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=header)
            writer.writeheader()
            for row in rows:
                writer.writerow({h: f"{row[h]:.17g}" for h in header})


def validate_betas(cfg: RunConfig):
    """Reject betas outside the strip the command's routes require."""
    for b in cfg.betas:
        if cfg.command == "sweep-discrete" and b.real <= -0.5:
            raise ValueError(f"sweep-discrete needs Re beta > -1/2, got {b}")
        if cfg.command == "sech-lab" and not -1.5 < b.real < 0.5:
            raise ValueError(f"sech-lab needs -3/2 < Re beta < 1/2, got {b}")
        if cfg.command == "sweep-continuous" and not -1.0 < b.real < 1.5:
            raise ValueError(
                f"sweep-continuous needs beta inside a valid strip, got {b}")


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv if argv is not None else sys.argv[1:])
        validate_betas(cfg)
    except (ValueError, SystemExit) as exc:
        if isinstance(exc, SystemExit):
            return 0 if exc.code in (0, None) else 2
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if cfg.command == "verify":
                rows, violations = run_verify(cfg)
            elif cfg.command == "sweep-discrete":
                rows, violations = _sweep_rows(cfg, continuous=False)
            elif cfg.command == "sweep-continuous":
                rows, violations = _sweep_rows(cfg, continuous=True)
            elif cfg.command == "sech-lab":
                rows, violations = run_sech_lab(cfg)
            else:
                rows, violations = run_constants(cfg)
    except WhdetError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    write_output(cfg, rows, violations)
    for v in violations:
        print(f"VIOLATION {v['check']}: {v['measured']:.3e} > {v['tol']:.3e}",
              file=sys.stderr)
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
