use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pontryagin_core::cyclic_coh::{chern_character, euler_class, l_class_linear, pullback_l_nonlinear};
use pontryagin_core::lforms::{random_form, Parity};
use pontryagin_core::repring::{solve_chern_targets, symmetrize};
use pontryagin_core::scalars::{parse_rational, rat, sign_of, Cyclotomic, CyclotomicField, CyclotomicReal};
use pontryagin_core::symfun::{ell_polynomial, parse_polynomial, GradedPolynomial, Monomial, Var};
use pontryagin_core::{LinearRepData, PrimeField, Rational, VirtualRep};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * a.recip()).is_one());
        }
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn prime_field_inverses(p in small_prime(), x in -1000i64..1000) {
        let f = PrimeField::new(p).unwrap();
        let v = f.elem(x);
        match v.inv() {
            Some(inv) => prop_assert_eq!(v * inv, f.one()),
            None => prop_assert!(v.is_zero()),
        }
        prop_assert_eq!(v.pow(p - 1) == f.one(), !v.is_zero());
    }

    #[test]
    fn cyclotomic_inverse_and_conjugation(
        level in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12]),
        coeffs in prop::collection::vec(-5i64..5, 1..6),
    ) {
        let f = CyclotomicField::new(level);
        let x = Cyclotomic::from_exponents(&f, coeffs.iter().enumerate().map(|(i, &c)| (i as i64, rat(c, 1))));
        prop_assert_eq!(x.conj().conj(), x.clone());
        if let Some(inv) = x.inv() {
            prop_assert_eq!(x.mul(&inv), Cyclotomic::one(&f));
        } else {
            prop_assert!(x.is_zero());
        }
        // x conj(x) is real and nonnegative
        let norm = x.mul(&x.conj());
        let s = sign_of(&CyclotomicReal::new(norm, 1).unwrap());
        prop_assert_eq!(s, if x.is_zero() { 0 } else { 1 });
    }

    #[test]
    fn sign_agrees_with_floating_point(
        level in prop::sample::select(vec![5u64, 7, 9, 16]),
        coeffs in prop::collection::vec(-4i64..4, 1..5),
        embedding in 1u64..20,
    ) {
        if num_integer::gcd(embedding, level) != 1 {
            return Ok(());
        }
        let f = CyclotomicField::new(level);
        let x = Cyclotomic::from_exponents(&f, coeffs.iter().enumerate().map(|(i, &c)| (i as i64, rat(c, 1))));
        let re = x.add(&x.conj());
        let approx: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                2.0 * c as f64 * (2.0 * std::f64::consts::PI * (i as u64 * embedding) as f64 / level as f64).cos()
            })
            .sum();
        let s = sign_of(&CyclotomicReal::new(re, embedding).unwrap());
        if approx.abs() > 1e-6 {
            prop_assert_eq!(s as f64, approx.signum());
        }
    }

    #[test]
    fn polynomial_text_round_trip(
        terms in prop::collection::vec((-9i64..9, 1i64..5, 0u32..3, 0u32..3, 0u32..2), 0..5),
    ) {
        let mut poly = GradedPolynomial::zero();
        for (n, d, a, b, c) in terms {
            let m = Monomial::from_pairs([(Var::E(3), a), (Var::P(1), b), (Var::P(2), c)].into_iter().filter(|x| x.1 > 0));
            poly = &poly + &GradedPolynomial::monomial(m, rat(n, d));
        }
        let text = poly.to_string();
        let back = parse_polynomial(&text, 3).unwrap();
        prop_assert_eq!(&back, &poly);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn ell_mod_p_matches_rational(
        p in prop::sample::select(vec![11u64, 13, 17]),
        a in prop::collection::vec(1i64..30, 1..4),
        i in 0u32..4,
    ) {
        let f = PrimeField::new(p).unwrap();
        if a.iter().any(|&x| x % p as i64 == 0) {
            return Ok(());
        }
        let rho = LinearRepData::new(p, &a).unwrap();
        let point: BTreeMap<Var, Rational> =
            a.iter().enumerate().map(|(j, &x)| (Var::A(j as u32 + 1), rat(x, 1))).collect();
        let exact = ell_polynomial(i, a.len() as u32).evaluate(&point).unwrap();
        prop_assert_eq!(l_class_linear(&rho, i).unwrap().coefficient(), f.from_rational(&exact).unwrap());
    }

    #[test]
    fn euler_class_multiplicative(p in small_prime(), a in prop::collection::vec(1i64..50, 1..4), b in prop::collection::vec(1i64..50, 1..4)) {
        let (Ok(x), Ok(y)) = (LinearRepData::new(p, &a), LinearRepData::new(p, &b)) else {
            return Ok(());
        };
        let s = x.direct_sum(&y).unwrap();
        prop_assert_eq!(euler_class(&s).coefficient(), euler_class(&x).coefficient() * euler_class(&y).coefficient());
    }

    #[test]
    fn chern_character_additive_and_conjugation(
        p in small_prime(),
        xs in prop::collection::vec((0i64..20, -5i64..5), 0..6),
        ys in prop::collection::vec((0i64..20, -5i64..5), 0..6),
    ) {
        let x = VirtualRep::from_pairs(p as u32, 1, xs);
        let y = VirtualRep::from_pairs(p as u32, 1, ys);
        for j in 0..p as u32 {
            let cx = chern_character(&x, j).unwrap().coefficient();
            let sum = chern_character(&x.add(&y).unwrap(), j).unwrap().coefficient();
            prop_assert_eq!(sum, cx + chern_character(&y, j).unwrap().coefficient());
            let conj = chern_character(&x.conjugate(), j).unwrap().coefficient();
            prop_assert_eq!(conj, if j % 2 == 0 { cx } else { -cx });
        }
    }

    #[test]
    fn solver_round_trip(p in small_prime(), seed in any::<u64>()) {
        let f = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let targets: Vec<_> = (0..p).map(|_| f.elem(rand::Rng::gen_range(&mut rng, 0..p as i64))).collect();
        let xi = solve_chern_targets(&f, &targets).unwrap();
        prop_assert!(xi.pairs().iter().all(|&(_, m)| (0..p as i64).contains(&m)));
        for j in 0..p as u32 {
            prop_assert_eq!(chern_character(&xi, j).unwrap().coefficient(), targets[j as usize]);
        }
    }

    #[test]
    fn symmetrize_properties(p in small_prime(), n in 2u32..7, xs in prop::collection::vec((0i64..13, -9i64..9), 0..6)) {
        let xi = VirtualRep::from_pairs(p as u32, 1, xs);
        let s = symmetrize(&xi, n).unwrap();
        let sign = if n % 2 == 0 { s.clone() } else { s.neg() };
        prop_assert_eq!(s.conjugate(), sign);
        for j in (0..p as u32).filter(|j| j % 2 == n % 2) {
            prop_assert_eq!(chern_character(&s, j).unwrap(), chern_character(&xi, j).unwrap());
        }
    }

    #[test]
    fn restriction_properties(p in prop::sample::select(vec![3u32, 5]), xs in prop::collection::vec((0i64..125, -9i64..9), 0..6)) {
        let xi = VirtualRep::from_pairs(p, 3, xs);
        prop_assert_eq!(xi.conjugate().restrict().unwrap(), xi.restrict().unwrap().conjugate());
        prop_assert_eq!(xi.restrict().unwrap().dim(), xi.dim());
    }

    #[test]
    fn pullback_with_zero_xi(p in prop::sample::select(vec![7u64, 11, 13]), a in prop::collection::vec(1i64..6, 2..5)) {
        let rho = LinearRepData::new(p, &a).unwrap();
        let zero = VirtualRep::zero(p as u32, 1);
        for i in 0..(p as u32 - 1) / 2 {
            prop_assert_eq!(pullback_l_nonlinear(&rho, &zero, i).unwrap(), l_class_linear(&rho, i).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn multisignature_additive_and_symmetric(seed in any::<u64>(), p in prop::sample::select(vec![3u32, 5]), minus in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let parity = if minus { Parity::Minus } else { Parity::Plus };
        let (r1, r2) = if minus { (2, 2) } else { (1, 2) };
        let a = random_form(&mut rng, p, 1, parity, r1).unwrap();
        let b = random_form(&mut rng, p, 1, parity, r2).unwrap();
        let ma = a.multisignature().unwrap();
        let mb = b.multisignature().unwrap();
        let sum = a.direct_sum(&b).unwrap().multisignature().unwrap();
        prop_assert_eq!(&sum, &ma.add(&mb).unwrap());
        let expect = if minus { sum.neg() } else { sum.clone() };
        prop_assert_eq!(sum.conjugate(), expect);
    }
}
