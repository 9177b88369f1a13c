use fusion_descent::arith::*;
use proptest::prelude::*;

fn phi_by_gcd(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            for j in (i * i..=limit).step_by(i) {
                composite[j] = true;
            }
        }
    }
    primes
}

#[test]
fn gauss_numbers_match_phi_power_of_two() {
    for n in 1..=100_000u64 {
        assert_eq!(is_gauss_number(n), euler_phi(n).is_power_of_two(), "n = {n}");
    }
}

#[test]
fn euler_phi_matches_gcd_count() {
    for n in 1..=500 {
        assert_eq!(euler_phi(n), phi_by_gcd(n), "n = {n}");
    }
}

#[test]
fn fermat_primes_are_the_known_five_below_2_32() {
    let known = [3u64, 5, 17, 257, 65537];
    for s in 0..6u32 {
        let f = (1u64 << (1u64 << s)) + 1;
        assert_eq!(is_fermat_prime(f), known.contains(&f), "F_{s}");
    }
    assert!(!is_fermat_prime(7) && !is_fermat_prime(9) && !is_fermat_prime(2));
}

#[test]
fn sqrt_hom_is_a_square_root_homomorphism() {
    for r in (1..=999u64).step_by(2) {
        for g in 0..r {
            let s = sqrt_hom(g, r).unwrap();
            assert_eq!((2 * s) % r, g, "r = {r}, g = {g}");
        }
        // additivity on a few pairs
        for (g, h) in [(1, r / 2), (r / 3, r - 1), (0, r / 5)] {
            let lhs = sqrt_hom((g + h) % r, r).unwrap();
            let rhs = (sqrt_hom(g, r).unwrap() + sqrt_hom(h, r).unwrap()) % r;
            assert_eq!(lhs, rhs);
        }
    }
    assert!(sqrt_hom(1, 4).is_err());
}

#[test]
fn unit_sqrt_hom_on_odd_part_of_f_p() {
    for p in [7u64, 11, 13, 29, 31, 37] {
        let phi = p - 1;
        let split = two_adic_split(phi).unwrap();
        let g = primitive_root(p).unwrap();
        let gamma = pow_mod(g, 1 << split.m, p);
        let mut x = 1;
        for _ in 0..split.r {
            let s = unit_sqrt_hom(x, split.r, p).unwrap();
            assert_eq!(mul_mod(s, s, p), x);
            x = mul_mod(x, gamma, p);
        }
    }
}

#[test]
fn prime_power_round_trip() {
    for p in sieve(97) {
        for n in 1..=10u32 {
            if let Some(x) = checked_pow(p, n) {
                assert_eq!(prime_power(x).unwrap(), Some(PrimePowerWitness { p, n }));
            }
        }
    }
    assert_eq!(prime_power(6).unwrap(), None);
    assert_eq!(prime_power(343).unwrap(), Some(PrimePowerWitness { p: 7, n: 3 }));
    assert!(prime_power(1).is_err());
}

#[test]
fn odd_prime_power_parity() {
    assert_eq!(odd_prime_power(27).unwrap(), Some(PrimePowerWitness { p: 3, n: 3 }));
    assert_eq!(odd_prime_power(7).unwrap(), Some(PrimePowerWitness { p: 7, n: 1 }));
    assert_eq!(odd_prime_power(9).unwrap(), None);
    assert_eq!(odd_prime_power(8).unwrap(), None);
}

#[test]
fn minus_one_is_a_square_iff_one_mod_four() {
    for p in sieve(10_000).into_iter().filter(|&p| p > 2) {
        assert_eq!(is_qr(-1, p).unwrap(), p % 4 == 1, "p = {p}");
    }
    assert!(is_qr(-1, 13).unwrap());
    assert!(!is_qr(-1, 7).unwrap());
}

#[test]
fn primality_agrees_with_sieve() {
    let primes = sieve(20_000);
    for n in 0..=20_000u64 {
        assert_eq!(is_prime(n), primes.binary_search(&n).is_ok(), "n = {n}");
    }
    // largest prime below 2^64
    assert!(is_prime(18_446_744_073_709_551_557));
    assert!(!is_prime(18_446_744_073_709_551_559));
}

proptest! {
    #[test]
    fn two_adic_split_recombines(x in 1u64..u64::MAX) {
        let s = two_adic_split(x).unwrap();
        prop_assert_eq!(s.r % 2, 1);
        prop_assert_eq!(s.r << s.m, x);
    }

    #[test]
    fn factorize_recombines(n in 2u64..10_000_000_000) {
        let f = factorize(n);
        let product: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
        prop_assert_eq!(product, n);
        prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn prime_power_witness_is_exact(x in 2u64..1_000_000) {
        match prime_power(x).unwrap() {
            Some(w) => {
                prop_assert!(is_prime(w.p));
                prop_assert_eq!(checked_pow(w.p, w.n), Some(x));
            }
            None => prop_assert!(factorize(x).len() > 1),
        }
    }
}
