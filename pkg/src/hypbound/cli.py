"""Command line front end: validate, bounds, certify, sweep, slit-audit, oracle-check.

Exit codes: 0 success, 1 property or hypothesis failure, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import bp, geometry, halving, oracles

CSV_HEADER = "z_re,z_im,abs_z,d,L,bp_lower,bp_upper,thm1_bound,oracle,case,chain_ok"
SLIT_HEADER = "delta,d,L_paper,L_literal,bp_upper_paper,bp_upper_literal,c_ceiling_paper"


class RejectionStarvation(RuntimeError):
    """Sampling kept rejecting; the domain spec is degenerate."""


class BadDelta(ValueError):
    """Slit audit needs 0 < delta < 1/4 so the probe point stays interior."""


def _fmt(x: float) -> str:
    return format(x, ".17g")


# ---------------------------------------------------------------------------
# rows


@dataclass(frozen=True)
class SweepRow:
    z: complex
    abs_z: float
    d: float
    L: float
    bp_lower: float
    bp_upper: float
    thm1_bound: float
    oracle: float | None
    case_tag: halving.CaseTag | None
    chain_ok: bool

    def csv(self) -> str:
        return ",".join(
            [
                _fmt(self.z.real),
                _fmt(self.z.imag),
                _fmt(self.abs_z),
                _fmt(self.d),
                _fmt(self.L),
                _fmt(self.bp_lower),
                _fmt(self.bp_upper),
                _fmt(self.thm1_bound),
                "" if self.oracle is None else _fmt(self.oracle),
                "" if self.case_tag is None else self.case_tag.value,
                "true" if self.chain_ok else "false",
            ]
        )


def point_row(
    spec: geometry.DomainSpec,
    consts: halving.HalvingConstants,
    z: complex,
    oracle: float | None = None,
) -> SweepRow:
    bounds = bp.bp_bounds(spec, z)
    thm1 = halving.lower_bound(consts, z)
    cert = halving.build_certificate(spec, consts, z)
    if not halving.verify_certificate(spec, consts, cert):
        raise RuntimeError(f"certificate failed verification at z = {z}")
    return SweepRow(
        z,
        abs(z),
        bounds.d,
        bounds.L,
        bounds.lower,
        bounds.upper,
        thm1,
        oracle,
        cert.case_tag,
        bounds.lower >= thm1,
    )


# ---------------------------------------------------------------------------
# sampling


def sample_domain_point(
    spec: geometry.DomainSpec, seed: int, index: int, r_min: float = 0.0
) -> complex:
    """Uniform point of G by rejection; the stream depends only on seed + index,
    so sweeps are reproducible under any parallel schedule."""
    rng = random.Random(seed + index)
    for _ in range(100_000):
        z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        if abs(z) < r_min:
            continue
        if geometry.contains(spec, z) is geometry.Membership.IN_G:
            return z
    raise RejectionStarvation("no acceptance in 100000 trials; degenerate domain spec")


def sweep_rows(
    spec: geometry.DomainSpec,
    consts: halving.HalvingConstants,
    n: int,
    seed: int,
    jobs: int = 1,
) -> list[SweepRow]:
    floor = min(abs(p) for p in spec.sequence.resolved_points) if spec.sequence else 0.0
    r_min = 10.0 * floor
    state = {"trials": 0, "accepted": 0}
    lock = threading.Lock()

    def one(i: int) -> SweepRow:
        rng = random.Random(seed + i)
        local = 0
        while True:
            z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
            local += 1
            if abs(z) >= r_min and geometry.contains(spec, z) is geometry.Membership.IN_G:
                break
            if local % 4096 == 0:
                with lock:
                    state["trials"] += local
                    local = 0
                    if state["trials"] >= 100_000 and state["accepted"] < 0.01 * state["trials"]:
                        raise RejectionStarvation(
                            "acceptance rate below 1% over 100000 trials; degenerate domain spec"
                        )
        with lock:
            state["trials"] += local
            state["accepted"] += 1
        return point_row(spec, consts, z)

    if jobs <= 1:
        return [one(i) for i in range(n)]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(one, range(n)))


# ---------------------------------------------------------------------------
# slit audit


@dataclass(frozen=True)
class SlitAuditRow:
    delta: float
    d: float
    L_paper: float
    L_literal: float
    bp_upper_paper: float
    bp_upper_literal: float
    c_ceiling_paper: float

    def csv(self) -> str:
        return ",".join(
            _fmt(v)
            for v in (
                self.delta,
                self.d,
                self.L_paper,
                self.L_literal,
                self.bp_upper_paper,
                self.bp_upper_literal,
                self.c_ceiling_paper,
            )
        )


def slit_audit_row(delta: float) -> SlitAuditRow:
    """Audit row for the radial-slit domain probed at z = 1/2.

    L_paper keeps only the gap back to the slit tip; L_literal is the full
    minimized quantity, which can instead be realized on the unit circle.
    Both upper bounds and the ceiling c <= |z| * upper are reported side by
    side without judgment.
    """
    if not 0.0 < delta < 0.25:
        raise BadDelta(f"delta = {delta} outside (0, 1/4)")
    seq = geometry.SequenceSpec.geometric(delta, 0.5, 60)
    spec = geometry.DomainSpec.build(
        [geometry.Segment(0j, complex(delta, 0.0))], seq
    )
    z = complex(0.5, 0.0)
    r = bp.bp_bounds(spec, z)
    d_paper = 0.5 - delta
    L_paper = math.log((0.5 - delta) / delta)
    upper_paper = (bp.KAPPA + math.pi / 4.0) / (d_paper * (bp.KAPPA + L_paper))
    ceiling_paper = (bp.KAPPA + math.pi / 4.0) / ((1.0 - 2.0 * delta) * (bp.KAPPA + L_paper))
    return SlitAuditRow(delta, d_paper, L_paper, r.L, upper_paper, r.upper, ceiling_paper)


# ---------------------------------------------------------------------------
# shared command plumbing


def _load_spec(path: str) -> geometry.DomainSpec:
    return geometry.load_domain(path)


def _parse_z(raw: str) -> complex:
    parts = raw.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected RE,IM, got {raw!r}")
    return complex(float(parts[0]), float(parts[1]))


def _validation_warnings(spec: geometry.DomainSpec):
    seq = spec.sequence
    if seq is not None and abs(seq.resolved_points[-1]) > 1e-10:
        yield (
            "sequence truncated above 1e-10; deep queries near the origin may "
            "exhaust the resolved dyadic annuli"
        )
    fat = [
        (i, p)
        for i, p in enumerate(spec.primitives)
        if isinstance(p, (geometry.Segment, geometry.ObstacleDisk))
    ]
    for (i, p), (j, q) in combinations(fat, 2):
        if geometry.primitive_clearance(p, q) < 1e-6:
            yield f"primitives {i} and {j} nearly touch; G may be disconnected"
    for i, p in fat:
        if 1.0 - geometry.max_modulus(p) < 1e-6:
            yield f"primitive {i} nearly touches the unit circle; G may be disconnected"
    for i, p in enumerate(spec.primitives):
        if isinstance(p, geometry.ObstacleDisk) and abs(p.center) < p.radius - 1e-12:
            yield (
                f"primitive {i} contains the origin in its interior; the origin "
                "is then not a boundary point of G"
            )


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    try:
        spec = _load_spec(args.spec)
    except (geometry.SpecError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = halving.check_halving(spec.sequence)
    if not report.ok:
        print(f"halving check: FAIL at index {report.first_violation}: {report.reason}")
        return 1
    consts = halving.constants(spec.sequence)
    print("halving check: ok")
    print(f"points resolved = {len(spec.sequence.resolved_points)}")
    print(f"delta = {_fmt(consts.delta)}")
    print(f"c = {_fmt(consts.c)}")
    print(f"branch log(4/delta) = {_fmt(consts.branch_log4delta)}")
    print(f"branch 5 log 2      = {_fmt(consts.branch_5log2)}")
    binding = "log(4/delta)" if consts.branch_log4delta <= consts.branch_5log2 else "5 log 2"
    print(f"binding branch = {binding}")
    for msg in _validation_warnings(spec):
        print(f"warning: {msg}")
    return 0


def _spec_and_constants(path: str):
    spec = _load_spec(path)
    consts = halving.constants(spec.sequence)
    return spec, consts


def cmd_bounds(args) -> int:
    try:
        spec, consts = _spec_and_constants(args.spec)
    except (geometry.SpecError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except halving.HypothesisViolated as e:
        print(f"hypothesis failure: {e}", file=sys.stderr)
        return 1
    try:
        z = _parse_z(args.z)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        row = point_row(spec, consts, z)
    except (geometry.NotInDomain, halving.ZeroArgument) as e:
        print(f"not in domain: {e}", file=sys.stderr)
        return 1
    if args.csv:
        print(CSV_HEADER)
        print(row.csv())
    else:
        print(f"z = {_fmt(row.z.real)} + {_fmt(row.z.imag)}i")
        print(f"|z| = {_fmt(row.abs_z)}")
        print(f"d = {_fmt(row.d)}")
        print(f"L = {_fmt(row.L)}")
        print(f"bp_lower = {_fmt(row.bp_lower)}")
        print(f"bp_upper = {_fmt(row.bp_upper)}")
        print(f"thm1_bound = {_fmt(row.thm1_bound)}")
        print(f"case = {row.case_tag.value}")
        print(f"chain_ok = {'true' if row.chain_ok else 'false'}")
    return 0


def cmd_certify(args) -> int:
    try:
        spec, consts = _spec_and_constants(args.spec)
    except (geometry.SpecError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except halving.HypothesisViolated as e:
        print(f"hypothesis failure: {e}", file=sys.stderr)
        return 1
    try:
        z = _parse_z(args.z)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        cert = halving.build_certificate(spec, consts, z)
    except (geometry.NotInDomain, halving.ZeroArgument) as e:
        print(f"not in domain: {e}", file=sys.stderr)
        return 1
    except halving.TruncationExceeded as e:
        print(f"truncation: {e}", file=sys.stderr)
        return 1
    print(json.dumps(halving.certificate_to_dict(cert, consts)))
    return 0 if halving.verify_certificate(spec, consts, cert) else 1


def cmd_sweep(args) -> int:
    try:
        spec = _load_spec(args.spec)
    except (geometry.SpecError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = halving.check_halving(spec.sequence)
    if not report.ok:
        print(
            f"hypothesis failure at index {report.first_violation}: {report.reason}",
            file=sys.stderr,
        )
        return 1
    consts = halving.constants(spec.sequence)
    try:
        rows = sweep_rows(spec, consts, args.n, args.seed, jobs=args.jobs)
    except RejectionStarvation as e:
        print(f"sampling failure: {e}", file=sys.stderr)
        return 1
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(CSV_HEADER + "\n")
            for row in rows:
                fh.write(row.csv() + "\n")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    bad = next((row for row in rows if not row.chain_ok), None)
    if bad is not None:
        print(f"chain violation: {bad.csv()}", file=sys.stderr)
        return 1
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_slit_audit(args) -> int:
    try:
        deltas = [float(s) for s in args.deltas.split(",") if s]
        if not deltas:
            raise ValueError("empty delta list")
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        rows = [slit_audit_row(d) for d in deltas]
    except BadDelta as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(SLIT_HEADER + "\n")
            for row in rows:
                fh.write(row.csv() + "\n")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    half_kpi4 = bp.KAPPA + math.pi / 4.0
    prod_paper = max(r.c_ceiling_paper * math.log(1.0 / r.delta) for r in rows)
    prod_literal = max(
        (half_kpi4 / ((1.0 - 2.0 * r.delta) * (bp.KAPPA + r.L_literal)))
        * math.log(1.0 / r.delta)
        for r in rows
    )
    print(f"wrote {len(rows)} rows to {args.out}")
    print(f"sup over grid of c_ceiling_paper * log(1/delta)   = {_fmt(prod_paper)}")
    print(f"sup over grid of c_ceiling_literal * log(1/delta) = {_fmt(prod_literal)}")
    for r in rows:
        tag = "equal" if abs(r.L_paper - r.L_literal) <= 1e-12 else "differ"
        print(f"delta = {_fmt(r.delta)}: L_paper and L_literal {tag} "
              f"({_fmt(r.L_paper)} vs {_fmt(r.L_literal)})")
    return 0


def cmd_oracle_check(args) -> int:
    try:
        kind = oracles.OracleDomain(args.kind)
    except ValueError:
        print(f"error: unknown oracle kind {args.kind!r}", file=sys.stderr)
        return 2
    spec = oracles.oracle_fixture(kind)
    for i in range(args.n):
        try:
            z = sample_domain_point(spec, args.seed, i)
        except RejectionStarvation as e:
            print(f"sampling failure: {e}", file=sys.stderr)
            return 1
        bounds = bp.bp_bounds(spec, z)
        lam = oracles.oracle_density(kind, z)
        if not bounds.lower <= lam <= bounds.upper:
            print(
                f"sandwich violation at z = {z}: lower {_fmt(bounds.lower)}, "
                f"oracle {_fmt(lam)}, upper {_fmt(bounds.upper)}",
                file=sys.stderr,
            )
            return 1
    print(f"{args.n} points: oracle stays inside the two-sided bounds")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypbound",
        description="Certified two-sided hyperbolic density estimates on unit-disk domains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the halving hypothesis and report constants")
    p.add_argument("spec", help="domain spec JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bounds", help="two-sided bounds at one point")
    p.add_argument("spec")
    p.add_argument("--z", required=True, help="query point as RE,IM")
    p.add_argument("--csv", action="store_true", help="emit a CSV row instead of text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", help="build and verify a certificate at one point")
    p.add_argument("spec")
    p.add_argument("--z", required=True, help="query point as RE,IM")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="random audit sweep to CSV")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker threads; output is identical for any value")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("slit-audit", help="radial-slit domain audit at z = 1/2")
    p.add_argument("--deltas", required=True, help="comma-separated slit lengths in (0, 1/4)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_slit_audit)

    p = sub.add_parser("oracle-check", help="closed-form density against the two-sided bounds")
    p.add_argument("--kind", required=True, choices=[k.value for k in oracles.OracleDomain])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
