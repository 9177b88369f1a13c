use fusion_descent::arith::{factorize, is_prime};
use fusion_descent::brauer::*;
use fusion_descent::field::FieldClass;
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn random_rational(rng: &mut StdRng) -> Rational64 {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-400i64..=400);
    }
    q(n, rng.gen_range(1i64..=60))
}

/// Places where a symbol can be non-trivial: the real place, 2, and primes of the numerators and denominators.
fn relevant_places(a: Rational64, b: Rational64) -> Vec<Place> {
    let mut primes = vec![2u64];
    for x in [*a.numer(), *a.denom(), *b.numer(), *b.denom()] {
        primes.extend(factorize(x.unsigned_abs()).into_iter().map(|(p, _)| p));
    }
    primes.sort_unstable();
    primes.dedup();
    std::iter::once(Place::Real).chain(primes.into_iter().map(Place::Finite)).collect()
}

#[test]
fn product_formula_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..200 {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let product: i8 = relevant_places(a, b).into_iter().map(|v| hilbert_symbol(a, b, v).unwrap()).product();
        assert_eq!(product, 1, "({a}, {b})");
        // primes outside the relevant set see units only
        for p in [101u64, 103, 107] {
            if !relevant_places(a, b).contains(&Place::Finite(p)) {
                assert_eq!(hilbert_symbol(a, b, Place::Finite(p)).unwrap(), 1);
            }
        }
    }
}

#[test]
fn symmetry_square_classes_and_bimultiplicativity() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, a2, b) = (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        let s = q(rng.gen_range(1..=12), rng.gen_range(1..=12));
        for v in relevant_places(a * a2, b) {
            let h = |x, y| hilbert_symbol(x, y, v).unwrap();
            assert_eq!(h(a, b), h(b, a));
            assert_eq!(h(a * s * s, b), h(a, b));
            assert_eq!(h(a * a2, b), h(a, b) * h(a2, b), "bimultiplicative at {v}");
            assert_eq!(h(a, -a), 1);
        }
    }
}

#[test]
fn hamilton_quaternions_ramify_at_real_and_two() {
    let h = QuaternionSymbol::from_integers(-1, -1).unwrap();
    assert_eq!(ramified_places(&h).unwrap(), vec![Place::Real, Place::Finite(2)]);
    assert!(quaternion_is_division(&h).unwrap());
}

/// Primitive solution of `a x^2 + b y^2 = z^2` modulo `p^k`.
fn locally_solvable(a: i64, b: i64, p: u64, k: u32) -> bool {
    let m = p.pow(k) as i64;
    let p = p as i64;
    for x in 0..m {
        for y in 0..m {
            let lhs = (a * x * x + b * y * y).rem_euclid(m);
            for z in 0..m {
                if (x % p != 0 || y % p != 0 || z % p != 0) && (z * z).rem_euclid(m) == lhs {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn local_symbols_against_congruence_oracle() {
    // square-free pairs; mod p^3 (odd p) and mod 2^5 decide solvability for these
    let pairs = [(-1i64, -1i64), (2, 5), (3, 5), (-1, 3), (-3, 5), (6, -7), (-2, -5), (7, 11), (-5, 10), (3, -3)];
    for (a, b) in pairs {
        let mut primes: Vec<u64> = vec![2];
        for (p, _) in factorize((a * b).unsigned_abs()) {
            primes.push(p);
        }
        primes.sort_unstable();
        primes.dedup();
        for p in primes {
            let k = if p == 2 { 5 } else { 3 };
            let expected = if locally_solvable(a, b, p, k) { 1 } else { -1 };
            assert_eq!(hilbert_symbol(a.into(), b.into(), Place::Finite(p)).unwrap(), expected, "({a},{b})_{p}");
        }
    }
}

/// Non-trivial integer solution of `a x^2 + b y^2 = z^2` with `|x|, |y| <= bound`.
fn small_height_solution(a: i64, b: i64, bound: i64) -> bool {
    for x in 0..=bound {
        for y in 0..=bound {
            if x == 0 && y == 0 {
                continue;
            }
            let v = a * x * x + b * y * y;
            if v < 0 {
                continue;
            }
            let z = (v as f64).sqrt().round() as i64;
            if (z - 1..=z + 1).any(|t| t >= 0 && t * t == v) {
                return true;
            }
        }
    }
    false
}

#[test]
fn division_test_against_small_height_fixture() {
    // square-free entries with |a|, |b| <= 15: a split algebra has a solution with |x|, |y| <= 15
    let fixture: [(i64, i64); 30] = [
        (-1, -1), (-1, 3), (-1, 2), (-1, 5), (-1, -3), (2, 3), (2, 5), (2, 7), (3, 5), (3, 7),
        (-2, -5), (-3, -7), (5, 7), (5, -1), (6, -7), (-6, 11), (10, 13), (-10, 3), (11, -1), (13, -1),
        (7, -3), (-7, -7), (14, 15), (-15, 2), (-11, -13), (1, 7), (3, -1), (-5, -5), (2, -1), (-2, 3),
    ];
    let mut split = 0;
    for (a, b) in fixture {
        let sym = QuaternionSymbol::from_integers(a, b).unwrap();
        let oracle_division = !small_height_solution(a, b, 15);
        assert_eq!(quaternion_is_division(&sym).unwrap(), oracle_division, "Q_{{{a},{b}}}");
        split += usize::from(!oracle_division);
        assert_eq!(ramified_places(&sym).unwrap().len() % 2, 0);
    }
    assert!(split > 5 && split < 25, "fixture should mix split and division cases");
}

#[test]
fn same_class_iff_same_ramification() {
    let a = QuaternionSymbol::from_integers(-1, -1).unwrap();
    let b = QuaternionSymbol::from_integers(-2, -5).unwrap();
    let c = QuaternionSymbol::from_integers(-1, 3).unwrap();
    assert_eq!(same_brauer_class(&a, &b).unwrap(), ramified_places(&a).unwrap() == ramified_places(&b).unwrap());
    assert!(!same_brauer_class(&a, &c).unwrap());
    assert!(same_brauer_class(&a, &QuaternionSymbol::new(q(-1, 4), q(-9, 1)).unwrap()).unwrap());
}

#[test]
fn br_n_descriptors() {
    assert_eq!(br_n(&FieldClass::Real, 2).unwrap().order(), Some(2));
    assert_eq!(br_n(&FieldClass::Real, 3).unwrap().order(), Some(1));
    assert_eq!(br_n(&FieldClass::Padic { p: 5 }, 6).unwrap().order(), Some(6));
    assert_eq!(br_n(&FieldClass::Finite { q: 9 }, 2).unwrap().order(), Some(1));
    assert_eq!(br_n(&FieldClass::RationalQ, 2).unwrap().order(), None);
    assert!(br_n(&FieldClass::RationalFunctionOverC { pairs: 1 }, 2).is_err());
    let qt = quasi_trivial_forms_group(&[2, 4], &FieldClass::Padic { p: 3 }).unwrap();
    assert_eq!(qt, GroupDescriptor::Finite { invariant_factors: vec![2, 4] });
    let qt = quasi_trivial_forms_group(&[6, 10], &FieldClass::Padic { p: 3 }).unwrap();
    assert_eq!(qt, GroupDescriptor::Finite { invariant_factors: vec![2, 30] });
}

#[test]
fn place_parsing() {
    assert_eq!("real".parse::<Place>().unwrap(), Place::Real);
    assert_eq!("7".parse::<Place>().unwrap(), Place::Finite(7));
    assert!("8".parse::<Place>().is_err());
    assert!(is_prime(7));
    assert!(hilbert_symbol(q(0, 1), q(1, 1), Place::Real).is_err());
}
