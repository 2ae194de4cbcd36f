"""Command-line surface.

One subcommand per procedure: `generate`, `verify`, `filter`, `carmichael`,
`bench`, and `roots`.  Machine-readable results go to stdout, diagnostics to
stderr.  `verify` exits 0 for PRIME and distinguishes REJECT (2),
COMPOSITE (3), RETRY (4), and file-level format problems (5); other
subcommands exit 0 on success and 1 on domain errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from .bench import run_bench
from .carmichael import search_carmichael
from .certfile import CertFileError, cert_decode, cert_encode
from .certify import GenerationError, Outcome, Verdict, generate_certificate, sprp_filter, verify
from .chain import DEFAULT_K_MAX, cyclotomic_roots
from .numtheory import is_probable_prime
from .ring import RingElement, cyclotomic_value

EXIT_PRIME = 0
EXIT_REJECT = 2
EXIT_COMPOSITE = 3
EXIT_RETRY = 4
EXIT_FORMAT = 5

_VERDICT_EXIT_CODES = {
    Outcome.PRIME: EXIT_PRIME,
    Outcome.REJECT: EXIT_REJECT,
    Outcome.COMPOSITE: EXIT_COMPOSITE,
    Outcome.RETRY: EXIT_RETRY,
}


def exit_code_for(verdict: Verdict) -> int:
    return _VERDICT_EXIT_CODES[verdict.outcome]


def _verdict_line(verdict: Verdict) -> str:
    parts = [f"verdict={verdict.outcome.value}"]
    if verdict.reason is not None:
        parts.append(f"reason={verdict.reason.value}")
    if verdict.witness is not None:
        parts.append(f"witness={verdict.witness}")
    return " ".join(parts)


def _cmd_generate(args) -> int:
    rng = random.Random(args.rng_seed)
    d = None if args.d == "auto" else int(args.d)
    try:
        cert = generate_certificate(
            args.bits, p=args.degree, d=d, k_max=args.k_max, mode=args.mode, rng=rng
        )
    except (GenerationError, ValueError) as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return 1
    text = cert_encode(cert)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"certificate written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    try:
        with open(args.cert) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read certificate: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    try:
        cert = cert_decode(text)
    except CertFileError as exc:
        print(f"certificate file rejected: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    verdict = verify(cert)
    print(_verdict_line(verdict))
    return exit_code_for(verdict)


def _cmd_filter(args) -> int:
    n, d = args.n, args.d
    if n % 3 != 1 or n % 2 == 0 or n <= 3:
        print("filter needs an odd n > 3 with n ≡ 1 (mod 3)", file=sys.stderr)
        return 1
    phi = cyclotomic_value(n, 3)
    found = None
    for k in range(1, DEFAULT_K_MAX + 1):
        if phi % k == 0 and is_probable_prime(phi // k):
            found = (k, phi // k)
            break
    if found is None:
        print("no factorization n²+n+1 = k·q with a small cofactor found", file=sys.stderr)
        return 1
    k, q = found
    print(f"factorization k={k} q={q}", file=sys.stderr)
    rng = random.Random(args.rng_seed)
    passed = 0
    for i in range(args.bases):
        coeffs = tuple(rng.randrange(n) for _ in range(3))
        while all(c == 0 for c in coeffs):
            coeffs = tuple(rng.randrange(n) for _ in range(3))
        ok = sprp_filter(n, d, RingElement(coeffs), k, q, 1)
        passed += ok
        print(f"base={i} pass={str(ok).lower()}")
    print(f"passed={passed}/{args.bases}")
    return 0 if passed == args.bases else 1


def _cmd_carmichael(args) -> int:
    try:
        reports = search_carmichael(args.max, args.d)
    except ValueError as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return 1
    for r in reports:
        factors = ",".join(str(f) for f in r.factor_list)
        print(
            f"N={r.N} factors={factors} squarefree={str(r.squarefree).lower()} "
            f"korselt_ok={str(r.korselt_ok).lower()} "
            f"irreducibility_ok={str(r.irreducibility_ok).lower()}"
        )
    print(f"count={len(reports)}", file=sys.stderr)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(b) for b in args.bits.split(",")]
    try:
        report = run_bench(sizes, p=args.degree, rng_seed=args.rng_seed)
    except (ValueError, GenerationError) as exc:
        print(f"bench failed: {exc}", file=sys.stderr)
        return 1
    for row in report.rows:
        print(
            f"bits={row.bits} verify_ms={row.verify_ms:.3f} "
            f"n_digits={row.n_digits} q_digits={row.q_digits}"
        )
    print(f"slope={'none' if report.slope is None else f'{report.slope:.3f}'}")
    return 0


def _cmd_roots(args) -> int:
    try:
        roots = cyclotomic_roots(args.p, args.q)
    except ValueError as exc:
        print(f"roots failed: {exc}", file=sys.stderr)
        return 1
    print(" ".join(str(r) for r in sorted(roots)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocert",
        description="Deterministic prime generation with verifiable cyclotomic ring certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct and certify a new prime")
    g.add_argument("--bits", type=int, required=True, help="target bit length of N")
    g.add_argument("--degree", type=int, default=3, help="prime ring degree p")
    g.add_argument("--d", default="auto", help="ring base: 'auto' or an integer")
    g.add_argument("--k-max", type=int, default=DEFAULT_K_MAX, help="largest cofactor to scan")
    g.add_argument("--mode", choices=("reversed", "forward"), default="reversed")
    g.add_argument("--rng-seed", type=int, default=0)
    g.add_argument("--out", help="write the certificate file here instead of stdout")
    g.set_defaults(func=_cmd_generate)

    v = sub.add_parser("verify", help="verify a certificate file")
    v.add_argument("--cert", required=True, help="path to the certificate file")
    v.set_defaults(func=_cmd_verify)

    f = sub.add_parser("filter", help="run the strong-probable-prime ring filter")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--bases", type=int, required=True, help="number of random bases")
    f.add_argument("--rng-seed", type=int, default=0)
    f.set_defaults(func=_cmd_filter)

    c = sub.add_parser("carmichael", help="search for cubic Carmichael candidates")
    c.add_argument("--max", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.set_defaults(func=_cmd_carmichael)

    b = sub.add_parser("bench", help="time certificate verification across sizes")
    b.add_argument("--bits", required=True, help="comma-separated ascending bit sizes")
    b.add_argument("--degree", type=int, default=3)
    b.add_argument("--rng-seed", type=int, default=0)
    b.set_defaults(func=_cmd_bench)

    r = sub.add_parser("roots", help="residues where the degree-p cyclotomic vanishes mod q")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--q", type=int, required=True)
    r.set_defaults(func=_cmd_roots)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
