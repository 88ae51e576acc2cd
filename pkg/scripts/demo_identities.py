#!/usr/bin/env python3
"""Guided tour: decide a few classical Gamma identities and print the receipts.

Runs the full pipeline on hand-picked inputs — class detection, reduction,
certificates, numeric spot checks — and narrates each step.
"""

from gamma_ideal.ideal import decide_membership, normal_form
from gamma_ideal.numeric import evaluate_poly, verify_verdict
from gamma_ideal.parser import parse_gamma_poly, parse_shifts
from gamma_ideal.shifts import build_shift_system


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def show_verdict(shifts_text: str, poly_text: str) -> None:
    sys_ = build_shift_system(parse_shifts(shifts_text))
    p = parse_gamma_poly(poly_text, sys_.arity)
    verdict = decide_membership(p, sys_)
    print(f"shifts   : {sys_.shifts_text()}")
    print(f"input    : {p}")
    print(f"verdict  : {'identity' if verdict.is_member else 'not an identity'}")
    print(f"normal form: {verdict.normal_form}")
    if verdict.is_member:
        for relation, cofactor in zip(
            verdict.certificate.generators, verdict.certificate.cofactors
        ):
            if not cofactor.is_zero():
                print(f"  cofactor ({cofactor}) * ({relation.as_poly})")
    report = verify_verdict(verdict, sys_, n_samples=12, seed=1)
    print(
        f"numeric  : max relative residual {report.max_relative_residual:.2e} "
        f"over {len(report.samples)} samples "
        f"({'consistent' if report.verdict_consistent else 'INCONSISTENT'})"
    )


def main() -> None:
    banner("The recurrence itself: Gamma(s+1) = s*Gamma(s)")
    show_verdict("0,1", "G(1)-s*G(0)")

    banner("A degree-2 identity at the chain 0,1,2")
    show_verdict("0,1,2", "G(0)*G(2)-G(1)^2-G(0)*G(1)")

    banner("Dropping one term breaks it")
    show_verdict("0,1,2", "G(0)*G(2)-G(1)^2")
    sys_ = build_shift_system(parse_shifts("0,1,2"))
    leftover = normal_form(parse_gamma_poly("G(0)*G(2)-G(1)^2", 3), sys_)
    value, scale = evaluate_poly(leftover, sys_, complex(1.0))
    print(f"the residue {leftover} at s=1 evaluates to {value.real:.6f}")

    banner("Half-integer shifts admit no relation at all")
    show_verdict("0,1/2", "G(0)*G(1)-1")

    banner("Iterated recurrence across a gap of 3")
    sys_ = build_shift_system(parse_shifts("1/2, 7/2"))
    generator = sys_.generators()[0].as_poly
    show_verdict("1/2, 7/2", str(generator))


if __name__ == "__main__":
    main()
