"""Smoke test for the modp_invariants extension module."""

import modp_invariants as m


def main():
    assert m.degrees("B3") == [2, 4, 6]
    assert m.degrees("E8") == [2, 8, 12, 14, 18, 20, 24, 30]
    assert m.bad_primes("Sp(4)") == [2] and m.torsion("Sp(4)") == []
    assert m.h_value(11) == 6

    report = m.verify_spin(7, 8)
    assert report["pass"], report
    assert report["claim"] == "k[c2,c3,eta2]"
    assert m.spin_invariant_dimension(7, 4) == 2

    dims = m.quillen_dims(11, 34)
    cmp = m.spin11_compare()
    assert cmp["D_top"] == cmp["D_low"] == dims[32]
    assert cmp["D_dR_lower"] == cmp["D_top"] + 1

    assert m.sq(1, "w2", 4) == "w1*w2 + w3"
    assert m.sq(1, "w2", 4, oriented=True) == "w3"
    assert m.whitney(["a", "b"], ["a", "a^2"], ["b", "0"]) == ["1", "a + b", "a^2"]
    det, ok = m.jacobian(3, "O")
    assert ok and det

    try:
        m.degrees("Q7")
    except ValueError:
        pass
    else:
        raise AssertionError("bad group name accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
