"""Smoke tests for the python bindings: exact scalar arithmetic, gonality
screens, and verification of a published canonical ideal."""

import sys

import canoneq


def check(cond, what):
    if not cond:
        print(f"FAIL: {what}")
        sys.exit(1)
    print(f"ok: {what}")


def main():
    # exact cyclotomic arithmetic round-trips through the canonical form
    check(canoneq.scalar("z16^7 * z16^-1") == "z8^3", "zeta_16^7 * zeta_16^-1 = zeta_8^3")
    check(canoneq.scalar("(1 - z3) * (1 - z3^2)") == "3", "norm of 1 - zeta_3")
    check(canoneq.scalar("-1/2*z8 + 3") == "-1/2*z8 + 3", "printer round trip")

    # gonality screen on a hyperelliptic corpus entry
    text, code = canoneq.screen("corpus/genus5/locus6/skg.txt")
    check(code == 0, "screen exit code")
    check("hyperelliptic: yes" in text, "hyperelliptic flag fires")

    # verification of a published genus-4 canonical ideal
    text, code = canoneq.verify(
        "corpus/genus4/locus9/ideal.txt",
        maps="corpus/genus4/locus9/maps.txt",
        genus=4,
    )
    check(code == 0, "verify exit code")
    check("hilbert_polynomial: 6*t - 3" in text, "canonical Hilbert polynomial")
    check("modular-certified" in text, "smoothness certificate")

    # character table of a small group
    text, code = canoneq.chartable("corpus/g64_41/group.txt")
    check(code == 0, "chartable exit code")
    check("classes: 16" in text, "16 conjugacy classes")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
