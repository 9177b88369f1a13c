use fusion_descent::arith::{is_prime, prime_power};
use fusion_descent::brauer::quaternion_is_division;
use fusion_descent::categorify::*;
use fusion_descent::field::FieldClass;

fn is_power_of_four(m: u64) -> bool {
    m.is_power_of_two() && m.trailing_zeros().is_multiple_of(2)
}

/// Bounded search straight from the defining equations.
fn s_ab_brute_force(a: u64, b: u64) -> Vec<(u64, u32, u32)> {
    let mut out = Vec::new();
    for p in (2..=a + 2).filter(|&p| is_prime(p)) {
        let mut m = 0u32;
        while p.pow(2 * m) <= a {
            let mut n = 1u32;
            while p.pow(n) <= a + 2 {
                let pn = p.pow(n);
                if p.pow(2 * m) * (pn - 1) == a && p.pow(m) * (pn - 2) == b {
                    out.push((p, m, n));
                }
                n += 1;
            }
            m += 1;
        }
    }
    out
}

#[test]
fn s_ab_agrees_with_brute_force() {
    for a in 1..=300u64 {
        for b in 0..=300u64 {
            let expected = s_ab_brute_force(a, b);
            assert_eq!(s_ab_solutions(a, b), expected, "({a},{b})");
            let verdict = categorify_s_ab(a, b).unwrap();
            assert_eq!(verdict.is_yes(), (a, b) == (1, 1) || !expected.is_empty());
        }
    }
}

#[test]
fn s_ab_matches_s_k() {
    for k in 1..=200u64 {
        assert_eq!(categorify_s_ab(k, k - 1).unwrap().answer, categorify_s_k(k).unwrap().answer, "k = {k}");
    }
}

#[test]
fn s_ab_with_b_zero_is_power_of_four() {
    for m in 1..=4096u64 {
        assert_eq!(categorify_s_ab(m, 0).unwrap().is_yes(), is_power_of_four(m), "m = {m}");
    }
}

#[test]
fn yes_witnesses_revalidate() {
    for k in 1..=500u64 {
        let v = categorify_s_k(k).unwrap();
        if let Some(w) = v.witnesses.first() {
            let (p, n) = (w.p.unwrap(), w.n.unwrap());
            assert!(is_prime(p) && p.pow(n) == k + 1);
        } else {
            assert!(v.obstruction.is_some());
        }
        let t = categorify_t_k(k).unwrap();
        if let Some(w) = t.witnesses.first() {
            let (p, n) = (w.p.unwrap(), w.n.unwrap());
            assert!(is_prime(p) && p % 2 == 1 && n % 2 == 1 && p.pow(n) == 4 * k - 1);
        } else {
            assert!(t.obstruction.is_some());
        }
    }
    for a in 1..=400u64 {
        for b in 0..=60u64 {
            for w in categorify_s_ab(a, b).unwrap().witnesses.iter().filter(|w| w.p.is_some()) {
                let (p, m, n) = (w.p.unwrap(), w.m.unwrap(), w.n.unwrap());
                assert!(is_prime(p) && n >= 1);
                assert_eq!(p.pow(2 * m) * (p.pow(n) - 1), a);
                assert_eq!(p.pow(m) * (p.pow(n) - 2), b);
            }
        }
    }
}

#[test]
fn r_m_over_algebraically_closed_fields() {
    for m in 1..=256 {
        assert_eq!(categorify_r_m(m, &FieldClass::AlgClosedChar0).unwrap().is_yes(), m == 1);
    }
}

#[test]
fn quaternion_witnesses_are_division() {
    for field in [FieldClass::RationalQ, FieldClass::Real] {
        let v = categorify_r_m(4, &field).unwrap();
        let signs: Vec<i8> = v.witnesses.iter().map(|w| w.sign.unwrap()).collect();
        assert_eq!(signs, vec![1, -1]);
        for w in &v.witnesses {
            assert!(quaternion_is_division(&w.quaternion.unwrap()).unwrap());
        }
    }
}

#[test]
fn r_pr_rules() {
    for p in [3u64, 5, 7] {
        for r in 1..=50u64 {
            let v = categorify_r_pr(p, r, &FieldClass::RationalQ).unwrap();
            assert_eq!(v.is_yes(), r == 1 || r == p, "R_({p},{r})");
            if v.is_yes() {
                assert_eq!(v.witnesses.len() as u64, p);
            }
            let power = prime_power(r.max(2)).unwrap().filter(|w| w.p == p).map(|w| w.n);
            let f = FieldClass::RationalFunctionOverC { pairs: 3 };
            match (r, power) {
                (1, _) => assert!(categorify_r_pr(p, r, &f).unwrap().is_yes()),
                (_, Some(n)) if n <= 3 => assert!(categorify_r_pr(p, r, &f).unwrap().is_yes()),
                (_, None) => assert!(!categorify_r_pr(p, r, &f).unwrap().is_yes()),
                _ => assert!(categorify_r_pr(p, r, &f).is_err()),
            }
        }
    }
    assert!(categorify_r_pr(4, 2, &FieldClass::RationalQ).is_err());
}

#[test]
fn no_verdicts_carry_obstructions() {
    let fields = [FieldClass::Real, FieldClass::RationalQ, FieldClass::Padic { p: 3 }, FieldClass::Finite { q: 7 }];
    for field in &fields {
        for m in 1..=70 {
            let v = categorify_r_m(m, field).unwrap();
            assert_eq!(v.is_yes(), v.obstruction.is_none());
            assert_eq!(v.is_yes(), !v.witnesses.is_empty());
            assert!(!v.paper_ref.is_empty());
        }
    }
}
