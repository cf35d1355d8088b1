"""Command-line front end: deterministic CSV sweeps and point reports.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 domain or numeric
error.  All floats are emitted with 12 significant digits and identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .coherent import AlgebraKind, AlgebraSpec, overlap_closed, overlap_series
from .correlations import (
    concurrence_pure,
    concurrence_x,
    discord_brute_force,
    discord_mixed_closed,
    discord_pure,
    werner_discord,
)
from .dynamics import (
    DephasingChannel,
    apply_dephasing,
    concurrence_t,
    default_time_grid,
    sudden_death_time,
)
from .errors import ConvergenceError, DomainError, WernerLimitRequired
from .states import (
    Parity,
    SuperpositionSpec,
    pure_bipartition,
    reduced_rho12,
    werner_limit_state,
)

P_MAX_DEFAULT = 0.999
P_STEPS_DEFAULT = 500
T_STEPS_DEFAULT = 200
FIGURE_N_DEFAULT = {1: (2,), 2: (4, 5, 25), 3: (4, 5, 25)}
FIGURE_PARITIES = {1: ("even", "odd"), 2: ("even",), 3: ("odd",)}


class UsageError(Exception):
    """Bad flag combination detected after argument parsing."""


@dataclass
class SweepConfig:
    """Resolved parameters of one CSV-emitting command."""

    mode: str
    p_steps: int = P_STEPS_DEFAULT
    p_max: float = P_MAX_DEFAULT
    n_list: tuple[int, ...] = ()
    parities: tuple[str, ...] = ("even", "odd")
    k: int | None = None
    p: float | None = None
    gamma_rate: float | None = None
    t_steps: int = T_STEPS_DEFAULT
    grid: tuple[int, int] = (181, 361)

    def __post_init__(self) -> None:
        if self.p_steps < 2:
            raise UsageError("need at least 2 sweep points")
        if not 0.0 < self.p_max < 1.0:
            raise UsageError("p_max must lie in (0, 1)")

    def p_values(self) -> np.ndarray:
        return np.linspace(0.0, self.p_max, self.p_steps)


def _fmt(value) -> str:
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.12g}"
    return str(value)


def _meta(command: str, **fields) -> str:
    parts = [f"# catcorr {command}", f"version={__version__}"]
    parts += [f"{key}={_fmt(val)}" for key, val in fields.items()]
    return " ".join(parts)


def _emit(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run_figure(fig: int, cfg: SweepConfig) -> list[str]:
    """Discord-versus-p sweep data for one of the three standard panels."""
    n_list = cfg.n_list or FIGURE_N_DEFAULT[fig]
    parities = FIGURE_PARITIES[fig]
    lines = [
        _meta(
            f"figure {fig}",
            n=",".join(str(n) for n in n_list),
            parity=",".join(parities),
            p_max=cfg.p_max,
            p_steps=cfg.p_steps,
        ),
        "p,n,parity,discord",
    ]
    for n in n_list:
        for parity in parities:
            for p in cfg.p_values():
                spec = SuperpositionSpec(float(p), Parity(parity), n)
                report = discord_mixed_closed(spec)
                lines.append(f"{_fmt(p)},{n},{parity},{_fmt(report.discord)}")
    return lines


def run_sweep_pure(cfg: SweepConfig) -> list[str]:
    """Concurrence and discord of the pure k|(n-k) splitting versus p."""
    (n,) = cfg.n_list
    lines = [
        _meta(
            "sweep-pure",
            n=n,
            k=cfg.k,
            parity=",".join(cfg.parities),
            p_max=cfg.p_max,
            p_steps=cfg.p_steps,
        ),
        "p,n,k,parity,concurrence,discord",
    ]
    for parity in cfg.parities:
        for p in cfg.p_values():
            spec = SuperpositionSpec(float(p), Parity(parity), n)
            bp = pure_bipartition(spec, cfg.k)
            report = discord_pure(bp)
            lines.append(
                f"{_fmt(p)},{n},{cfg.k},{parity},"
                f"{_fmt(report.concurrence)},{_fmt(report.discord)}"
            )
    return lines


def run_dynamics(spec: SuperpositionSpec, cfg: SweepConfig) -> list[str]:
    """Dephasing sweep: closed-form and Wootters concurrence plus
    brute-force discord on a uniform time grid."""
    rate = cfg.gamma_rate
    t_death = sudden_death_time(spec, rate)
    times = default_time_grid(spec, rate, cfg.t_steps)
    lines = [
        _meta(
            "dynamics",
            p=spec.p,
            n=spec.n,
            parity=spec.parity.value,
            gamma_rate=rate,
            t_steps=cfg.t_steps,
            grid=f"{cfg.grid[0]}x{cfg.grid[1]}",
            t0=t_death,
        ),
        "t,gamma,concurrence_closed,concurrence_wootters,discord_brute,is_past_t0",
    ]
    state = reduced_rho12(spec)
    for t in times:
        channel = DephasingChannel(rate, float(t))
        evolved = apply_dephasing(state, channel)
        report = discord_brute_force(evolved, grid=cfg.grid)
        lines.append(
            ",".join(
                [
                    _fmt(t),
                    _fmt(channel.gamma),
                    _fmt(concurrence_t(spec, channel)),
                    _fmt(concurrence_x(evolved)),
                    _fmt(report.discord),
                    "1" if t >= t_death else "0",
                ]
            )
        )
    return lines


def _report_lines(label: str, report) -> list[str]:
    return [
        f"{label}mutual_information_bits = {_fmt(report.mutual_info)}",
        f"{label}classical_correlation_bits = {_fmt(report.classical_corr)}",
        f"{label}discord_bits = {_fmt(report.discord)}",
        f"{label}concurrence = {_fmt(report.concurrence)}",
        f"{label}entanglement_of_formation_bits = {_fmt(report.eof)}",
        f"{label}conditional_entropy_min_bits = {_fmt(report.s_cond_min)}",
        f"{label}argmin_theta = {_fmt(report.argmin.theta)}",
        f"{label}argmin_phi = {_fmt(report.argmin.phi)}",
    ]


def run_point(spec: SuperpositionSpec, k: int | None, grid: tuple[int, int]) -> list[str]:
    """Full closed-form report, brute-force cross-check and residual for a
    single parameter point, plus the pure splitting when k is given."""
    closed = discord_mixed_closed(spec)
    brute = discord_brute_force(reduced_rho12(spec), grid=grid)
    lines = [
        f"p = {_fmt(spec.p)}",
        f"n = {spec.n}",
        f"parity = {spec.parity.value}",
    ]
    if spec.algebra is not None:
        lines.insert(0, f"algebra = {_KIND_NAMES[spec.algebra.kind]} z = {spec.z}")
    lines += _report_lines("", closed)
    lines.append(f"discord_brute_force_bits = {_fmt(brute.discord)}")
    lines.append(f"closed_minus_brute = {_fmt(closed.discord - brute.discord)}")
    if k is not None:
        bp = pure_bipartition(spec, k)
        pure = discord_pure(bp)
        lines.append(f"pure splitting k = {k}")
        lines.append(
            "pure_amplitudes = "
            + ",".join(_fmt(c) for c in (bp.c00, bp.c01, bp.c10, bp.c11))
        )
        lines.append(f"pure_concurrence = {_fmt(pure.concurrence)}")
        lines.append(f"pure_discord_bits = {_fmt(pure.discord)}")
    return lines


def run_point_werner(n: int, grid: tuple[int, int]) -> list[str]:
    """Report on the p -> 1 odd-parity limit state for n modes."""
    state = werner_limit_state(n)
    closed = werner_discord(n)
    brute = discord_brute_force(state, grid=grid)
    return [
        f"werner limit, n = {n}",
        f"discord_closed_bits = {_fmt(closed)}",
        f"discord_brute_force_bits = {_fmt(brute.discord)}",
        f"closed_minus_brute = {_fmt(closed - brute.discord)}",
        f"concurrence = {_fmt(concurrence_x(state))}",
    ]


def run_overlap(alg: AlgebraSpec, z: complex) -> list[str]:
    """Closed-form versus series overlap at one amplitude."""
    closed = overlap_closed(alg, z)
    series = overlap_series(alg, z)
    return [
        f"algebra = {_KIND_NAMES[alg.kind]}"
        + (f" rep_param = {_fmt(alg.rep_param)}" if alg.rep_param is not None else ""),
        f"z = {z}",
        f"overlap_closed = {_fmt(closed.value)}",
        f"overlap_series = {_fmt(series.value)}",
        f"closed_minus_series = {_fmt(closed.value - series.value)}",
    ]


class _Parser(argparse.ArgumentParser):
    # usage problems exit with code 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        n_theta, n_phi = (int(part) for part in text.lower().split("x"))
    except ValueError as exc:
        raise UsageError(f"grid must look like 181x361, got {text!r}") from exc
    return n_theta, n_phi


def _parse_complex(text: str) -> complex:
    try:
        return complex(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse amplitude {text!r} as a complex number") from exc


_ALGEBRAS = {
    "glauber": AlgebraKind.HARMONIC,
    "su2": AlgebraKind.SU2,
    "su11": AlgebraKind.SU11,
}
_KIND_NAMES = {kind: name for name, kind in _ALGEBRAS.items()}


def _resolve_algebra(args) -> AlgebraSpec:
    if args.z is None:
        raise UsageError("--algebra needs --z")
    return AlgebraSpec(_ALGEBRAS[args.algebra], args.rep_param)


def _resolve_spec(args) -> SuperpositionSpec:
    parity = Parity(args.parity)
    if args.algebra is not None:
        alg = _resolve_algebra(args)
        overlap = overlap_closed(alg, _parse_complex(args.z))
        return SuperpositionSpec.from_overlap(overlap, parity, args.n)
    if args.p is None:
        raise UsageError("give either --p or --algebra with --z")
    return SuperpositionSpec(args.p, parity, args.n)


def build_parser() -> _Parser:
    parser = _Parser(prog="catcorr", description=__doc__)
    parser.add_argument("--version", action="version", version=f"catcorr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fig = sub.add_parser("figure", help="discord-versus-p sweep for a standard panel")
    fig.add_argument("fig", type=int, choices=(1, 2, 3))
    fig.add_argument("--n", type=int, nargs="+", default=None)
    fig.add_argument("--p-steps", type=int, default=P_STEPS_DEFAULT)
    fig.add_argument("--p-max", type=float, default=P_MAX_DEFAULT)
    fig.add_argument("--out", default=None)

    point = sub.add_parser("point", help="closed-form report plus brute-force check")
    point.add_argument("--p", type=float, default=None)
    point.add_argument("--algebra", choices=sorted(_ALGEBRAS), default=None)
    point.add_argument("--z", default=None)
    point.add_argument("--rep-param", type=float, default=None)
    point.add_argument("--n", type=int, required=True)
    point.add_argument("--parity", choices=("even", "odd"), default=None)
    point.add_argument("--k", type=int, default=None)
    point.add_argument("--grid", default="181x361")
    point.add_argument("--werner-limit", action="store_true")
    point.add_argument("--out", default=None)

    sweep = sub.add_parser("sweep-pure", help="pure-splitting concurrence and discord sweep")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--k", type=int, required=True)
    sweep.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    sweep.add_argument("--p-steps", type=int, default=P_STEPS_DEFAULT)
    sweep.add_argument("--p-max", type=float, default=P_MAX_DEFAULT)
    sweep.add_argument("--out", default=None)

    dyn = sub.add_parser("dynamics", help="dephasing sweep with sudden-death marker")
    dyn.add_argument("--p", type=float, default=None)
    dyn.add_argument("--algebra", choices=sorted(_ALGEBRAS), default=None)
    dyn.add_argument("--z", default=None)
    dyn.add_argument("--rep-param", type=float, default=None)
    dyn.add_argument("--n", type=int, required=True)
    dyn.add_argument("--parity", choices=("even", "odd"), required=True)
    dyn.add_argument("--gamma-rate", type=float, required=True)
    dyn.add_argument("--t-steps", type=int, default=T_STEPS_DEFAULT)
    dyn.add_argument("--grid", default="181x361")
    dyn.add_argument("--out", default=None)

    over = sub.add_parser("overlap", help="closed-form versus series overlap")
    over.add_argument("--algebra", choices=sorted(_ALGEBRAS), required=True)
    over.add_argument("--z", required=True)
    over.add_argument("--rep-param", type=float, default=None)
    over.add_argument("--out", default=None)

    return parser


def _dispatch(args) -> list[str]:
    if args.command == "figure":
        cfg = SweepConfig(
            mode="figure",
            p_steps=args.p_steps,
            p_max=args.p_max,
            n_list=tuple(args.n) if args.n else (),
        )
        return run_figure(args.fig, cfg)
    if args.command == "point":
        grid = _parse_grid(args.grid)
        if args.werner_limit:
            return run_point_werner(args.n, grid)
        if args.parity is None:
            raise UsageError("--parity is required unless --werner-limit is given")
        try:
            spec = _resolve_spec(args)
        except WernerLimitRequired as exc:
            raise WernerLimitRequired(f"{exc}; rerun with --werner-limit") from None
        return run_point(spec, args.k, grid)
    if args.command == "sweep-pure":
        parities = ("even", "odd") if args.parity == "both" else (args.parity,)
        cfg = SweepConfig(
            mode="sweep-pure",
            p_steps=args.p_steps,
            p_max=args.p_max,
            n_list=(args.n,),
            parities=parities,
            k=args.k,
        )
        return run_sweep_pure(cfg)
    if args.command == "dynamics":
        cfg = SweepConfig(
            mode="dynamics",
            gamma_rate=args.gamma_rate,
            t_steps=args.t_steps,
            grid=_parse_grid(args.grid),
        )
        if cfg.gamma_rate <= 0.0:
            raise UsageError("--gamma-rate must be positive")
        if cfg.t_steps < 2:
            raise UsageError("--t-steps must be at least 2")
        return run_dynamics(_resolve_spec(args), cfg)
    if args.command == "overlap":
        return run_overlap(_resolve_algebra(args), _parse_complex(args.z))
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = _dispatch(args)
        _emit(getattr(args, "out", None), lines)
    except UsageError as exc:
        print(f"catcorr: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"catcorr: {exc}", file=sys.stderr)
        return 2
    except (DomainError, WernerLimitRequired, ConvergenceError, ValueError) as exc:
        print(f"catcorr: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
