//! The detection pipeline: change to L-coordinates, specialization to linear
//! data, rational witness search, per-prime certificate synthesis and
//! independent verification.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::certificate::{ProblemRecord, PullbackRecord, WitnessRecord, CERTIFICATE_VERSION};
use crate::cyclic_coh::{euler_class, l_class_linear, pullback_l_nonlinear, LinearRepData};
use crate::repring::{solve_chern_targets, symmetrize, RepPairs, VirtualRep};
use crate::scalars::{is_prime, next_odd_prime_after, parse_rational, prime_factors, FpScalar, PrimeField, Rational};
use crate::symfun::{ell_polynomial, l_table, parse_polynomial, tanh_series, GradedPolynomial, LTable, Monomial, Var};
use crate::{Error, Result};

pub use crate::certificate::WitnessCertificate;

/// Largest supported half-dimension `n`.
pub const MAX_HALF_DIMENSION: u32 = 12;
/// Largest supported Pontryagin index `m`.
pub const MAX_PONTRYAGIN_INDEX: u32 = 12;
/// Witness points whose bound `N` would exceed this are skipped, so that
/// every prime above `N` still fits the prime-field arithmetic.
pub const MAX_BOUND: u64 = 1 << 30;
/// Preferred ceiling for `N` above the problem's own floor. Certificates
/// carry one multiplicity per character of `C_p`, so a point whose value has
/// a large prime factor is passed over while a smoother one is found within
/// [`SMOOTH_SEARCH_BUDGET`] grid points.
pub const SMOOTH_BOUND: u64 = 1 << 16;
/// Grid points examined while looking for a point within [`SMOOTH_BOUND`].
pub const SMOOTH_SEARCH_BUDGET: usize = 20_000;
// Grid levels beyond this are not searched.
const MAX_GRID_LEVEL: u64 = 64;

/// `Xi` in `e, p_1, ..., p_m` together with its derived data.
#[derive(Clone, Debug)]
pub struct DetectionProblem {
    xi: GradedPolynomial,
    n: u32,
    m: u32,
    k: u32,
    weight: u32,
    xi_l: GradedPolynomial,
    specialized: GradedPolynomial,
    free: Vec<u32>,
}

impl DetectionProblem {
    /// `m` defaults to the largest Pontryagin index in `xi`, raised to
    /// `k = ceil(n/2)` if necessary.
    pub fn new(xi: GradedPolynomial, n: u32, m: Option<u32>) -> Result<DetectionProblem> {
        let (k, m, weight) = check_problem(&xi, n, m)?;
        let table = l_table(m);
        let xi_l = to_l_coordinates(&xi, &table)?;
        let specialized = specialize(&xi_l, n, m)?;
        let free = free_indices(&xi_l, k, m);
        Ok(DetectionProblem {
            xi,
            n,
            m,
            k,
            weight,
            xi_l,
            specialized,
            free,
        })
    }

    /// Parses `text` with `e` of weight `n`.
    pub fn parse(text: &str, n: u32, m: Option<u32>) -> Result<DetectionProblem> {
        DetectionProblem::new(parse_polynomial(text, n)?, n, m)
    }

    pub fn xi(&self) -> &GradedPolynomial {
        &self.xi
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Weight `r` of `Xi` (cohomological degree `2r`).
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// `Xi` in the variables `e, x_1, ..., x_m`.
    pub fn l_coordinates(&self) -> &GradedPolynomial {
        &self.xi_l
    }

    /// `Xi` in the variables `a_1, ..., a_n, x_k, ..., x_m`.
    pub fn specialized(&self) -> &GradedPolynomial {
        &self.specialized
    }

    /// Indices `i >= k` whose `x_i` occurs in the specialized polynomial;
    /// these are the free witness coordinates after `a_1, ..., a_n`.
    pub fn free_indices(&self) -> &[u32] {
        &self.free
    }

    fn witness_vars(&self) -> Vec<Var> {
        (1..=self.n)
            .map(Var::A)
            .chain(self.free.iter().map(|&i| Var::X(i)))
            .collect()
    }
}

fn check_problem(xi: &GradedPolynomial, n: u32, m: Option<u32>) -> Result<(u32, u32, u32)> {
    if !(2..=MAX_HALF_DIMENSION).contains(&n) {
        return Err(Error::Domain(format!("n = {n} outside 2..={MAX_HALF_DIMENSION}")));
    }
    if xi.is_zero() {
        return Err(Error::Domain("Xi must be nonzero".into()));
    }
    for v in xi.used_variables() {
        match v {
            Var::P(_) => {}
            Var::E(w) if w == n => {}
            other => {
                return Err(Error::UnknownVariable(format!(
                    "{other} (Xi is a polynomial in e, p_i)"
                )))
            }
        }
    }
    let weight = xi.homogeneous_weight().ok_or(Error::Inhomogeneous)?;
    let k = n.div_ceil(2);
    let m = m.unwrap_or(0).max(xi.max_pontryagin_index()).max(k);
    if m > MAX_PONTRYAGIN_INDEX {
        return Err(Error::Domain(format!("m = {m} exceeds {MAX_PONTRYAGIN_INDEX}")));
    }
    Ok((k, m, weight))
}

fn free_indices(xi_l: &GradedPolynomial, k: u32, m: u32) -> Vec<u32> {
    let used = xi_l.used_variables();
    (k..=m).filter(|&i| used.contains(&Var::X(i))).collect()
}

/// `e -> e`, `p_i -> P_i(x_1, ..., x_i)`.
pub fn to_l_coordinates(xi: &GradedPolynomial, table: &LTable) -> Result<GradedPolynomial> {
    let top = xi.max_pontryagin_index();
    if top > table.max_index() {
        return Err(Error::Domain(format!(
            "L-table reaches index {} < {top}",
            table.max_index()
        )));
    }
    let assignment: BTreeMap<Var, GradedPolynomial> = table
        .pontryagin_to_l()
        .into_iter()
        .filter(|(v, _)| xi.variables().contains(v))
        .collect();
    xi.substitute(&assignment)
}

/// `e -> a_1 ... a_n`, `x_i -> ell_i(a)` for `i < k = ceil(n/2)`, and `x_i`
/// fixed for `i >= k`. A zero result would contradict injectivity of this
/// map and is reported as an internal error.
pub fn specialize(xi_l: &GradedPolynomial, n: u32, m: u32) -> Result<GradedPolynomial> {
    let k = n.div_ceil(2);
    let a_vars: Vec<Var> = (1..=n).map(Var::A).collect();
    let mut assignment = BTreeMap::new();
    for &v in xi_l.variables() {
        match v {
            Var::E(w) if w == n => {
                let prod = Monomial::from_pairs(a_vars.iter().map(|&a| (a, 1)));
                assignment.insert(v, GradedPolynomial::monomial(prod, Rational::one()));
            }
            Var::X(i) if i < k => {
                assignment.insert(v, ell_polynomial(i, n));
            }
            Var::X(i) if i <= m => {}
            other => return Err(Error::UnknownVariable(other.to_string())),
        }
    }
    let out = xi_l.substitute(&assignment)?.with_variables(a_vars);
    if !xi_l.is_zero() && out.is_zero() {
        return Err(Error::Internal(
            "specialization of a nonzero polynomial vanished".into(),
        ));
    }
    Ok(out)
}

/// A rational point with nonzero coordinates at which the specialized
/// polynomial does not vanish, and the bound `N` making everything a unit in
/// `Z[1/N!]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPoint {
    z: Vec<Rational>,
    value: Rational,
    bound: u64,
}

impl WitnessPoint {
    /// Coordinates `(a_1, ..., a_n, x_i for i in free_indices)`.
    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// The bound `N`.
    pub fn bound(&self) -> u64 {
        self.bound
    }
}

/// Position `i` of the coordinate sequence `1, -1, 2, -2, ...`.
fn grid_coordinate(i: u64) -> i64 {
    let v = (i / 2 + 1) as i64;
    if i % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Integer points in `{±1, ±2, ...}^dim` by max-norm, then lexicographically
/// by position in the coordinate sequence.
struct Grid {
    level: u64,
    idx: Vec<u64>,
    fresh: bool,
}

impl Grid {
    fn new(dim: usize) -> Grid {
        Grid {
            level: 1,
            idx: vec![0; dim],
            fresh: true,
        }
    }

    // Odometer step within [0, 2 level)^dim; false when exhausted.
    fn step(&mut self) -> bool {
        let top = 2 * self.level;
        for d in (0..self.idx.len()).rev() {
            self.idx[d] += 1;
            if self.idx[d] < top {
                return true;
            }
            self.idx[d] = 0;
        }
        false
    }

    fn next_point(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.fresh {
                self.fresh = false;
            } else if !self.step() {
                self.level += 1;
                if self.level > MAX_GRID_LEVEL {
                    return None;
                }
                self.idx.iter_mut().for_each(|x| *x = 0);
            }
            let floor = 2 * self.level - 2;
            if self.idx.iter().any(|&i| i >= floor) {
                return Some(self.idx.iter().map(|&i| grid_coordinate(i)).collect());
            }
        }
    }
}

fn bound_for(problem_floor: u64, z: &[Rational], value: &Rational) -> Option<u64> {
    let mut best = problem_floor;
    for q in z.iter().chain(std::iter::once(value)) {
        for part in [q.numer(), q.denom()] {
            for f in prime_factors(part).ok()? {
                best = best.max(f);
            }
        }
    }
    (best <= MAX_BOUND).then_some(best)
}

/// The minimal admissible `N` floor: `2m + 1`, together with every prime in
/// a coefficient denominator of `Xi` in L-coordinates (those must be
/// invertible mod `p` to evaluate the pullbacks).
fn bound_floor(xi_l: &GradedPolynomial, m: u32) -> Result<u64> {
    Ok((2 * m as u64 + 1).max(xi_l.largest_denominator_prime()?))
}

/// First grid point with nonzero value whose bound stays within
/// `max(floor, SMOOTH_BOUND)`; if none appears within the search budget, the
/// first nonzero point with a representable bound.
pub fn find_rational_witness(problem: &DetectionProblem) -> Result<WitnessPoint> {
    let vars = problem.witness_vars();
    let floor = bound_floor(&problem.xi_l, problem.m)?;
    let preferred = floor.max(SMOOTH_BOUND);
    let mut fallback = None;
    let mut grid = Grid::new(vars.len());
    let mut seen = 0usize;
    while let Some(point) = grid.next_point() {
        seen += 1;
        if seen > SMOOTH_SEARCH_BUDGET && fallback.is_some() {
            break;
        }
        let z: Vec<Rational> = point.iter().map(|&c| Rational::from_integer(c.into())).collect();
        let assignment: BTreeMap<Var, Rational> = vars.iter().copied().zip(z.iter().cloned()).collect();
        let value = problem.specialized.evaluate(&assignment)?;
        if value.is_zero() {
            continue;
        }
        if let Some(bound) = bound_for(floor, &z, &value) {
            let w = WitnessPoint { z, value, bound };
            if bound <= preferred {
                return Ok(w);
            }
            fallback.get_or_insert(w);
        }
    }
    fallback.ok_or_else(|| Error::Internal("no witness within the searched grid".into()))
}

fn wire_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Synthesizes the certificate at the odd prime `p > N`.
pub fn build_certificate(problem: &DetectionProblem, witness: &WitnessPoint, p: u64) -> Result<WitnessCertificate> {
    if p <= witness.bound {
        return Err(Error::Domain(format!("prime {p} must exceed N = {}", witness.bound)));
    }
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let field = PrimeField::new(p)?;
    let (n, k, m) = (problem.n, problem.k, problem.m);
    let expected_len = n as usize + problem.free.len();
    if witness.z.len() != expected_len {
        return Err(Error::Mismatch(format!(
            "witness has {} coordinates, expected {expected_len}",
            witness.z.len()
        )));
    }
    let reduced: Vec<FpScalar> = witness
        .z
        .iter()
        .map(|q| field.from_rational(q))
        .collect::<Result<_>>()?;
    let residues: Vec<i64> = reduced[..n as usize].iter().map(|r| r.value() as i64).collect();
    let rho = LinearRepData::new(p, &residues)?;
    let euler = euler_class(&rho).coefficient();

    // (a) free targets x_i for k <= i <= m
    let mut prescribed = BTreeMap::new();
    for (&i, &x) in problem.free.iter().zip(&reduced[n as usize..]) {
        prescribed.insert(i, x);
    }
    let mut x_bar = Vec::new();
    for i in k..=m {
        let ell = l_class_linear(&rho, i)?.coefficient();
        x_bar.push((i, ell, prescribed.get(&i).copied().unwrap_or(ell)));
    }

    // (b) Chern-character targets realizing them
    let mut targets = vec![field.zero(); p as usize];
    for &(i, ell, x) in &x_bar {
        let d = 2 * i - n;
        let scale = field.elem(2).pow(2 + d as u64) * euler;
        targets[d as usize] = (ell - x) * scale.inv().expect("2 and E are units");
    }

    // (c) xi with the required conjugation symmetry
    let xi = symmetrize(&solve_chern_targets(&field, &targets)?, n)?;

    // (d) pullbacks
    let mut l = Vec::new();
    let mut point = BTreeMap::new();
    point.insert(Var::E(n), euler);
    for i in 1..=m {
        let c = if i < k {
            l_class_linear(&rho, i)?
        } else {
            pullback_l_nonlinear(&rho, &xi, i)?
        };
        l.push((i, c.coefficient().value() as u64));
        point.insert(Var::X(i), c.coefficient());
    }
    for &(i, _, x) in &x_bar {
        if point[&Var::X(i)] != x {
            return Err(Error::Internal(format!("pullback of L_{i} misses its target")));
        }
    }

    // (e) evaluation
    let evaluation = problem.xi_l.evaluate_mod(&field, &point)?;
    if evaluation != field.from_rational(&witness.value)? {
        return Err(Error::Internal("evaluation differs from Xi(z) mod p".into()));
    }

    Ok(WitnessCertificate {
        version: CERTIFICATE_VERSION,
        problem: ProblemRecord {
            xi: problem.xi.to_string(),
            n,
            m,
            k,
            degree_2r: 2 * problem.weight,
        },
        witness: WitnessRecord {
            z: witness.z.iter().map(wire_rational).collect(),
            value: wire_rational(&witness.value),
            bound: witness.bound,
        },
        prime: p,
        residues: residues.iter().map(|&r| r as u64).collect(),
        targets: x_bar.iter().map(|&(_, _, x)| x.value() as u64).collect(),
        xi_rep: xi.pairs(),
        pullbacks: PullbackRecord {
            euler: euler.value() as u64,
            l,
        },
        evaluation: evaluation.value() as u64,
    })
}

/// Outcome of [`verify_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    failure: Option<String>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }

    /// Name of the first failing check.
    pub fn failure(&self) -> Option<&str> {
        self.failure.as_deref()
    }
}

/// Re-derives every pullback from the residues and `xi` alone, re-evaluates
/// `Xi` both on the pullbacks mod `p` and exactly at the witness point, and
/// checks the stored record against them. Never panics on malformed input.
pub fn verify_certificate(cert: &WitnessCertificate) -> VerificationReport {
    VerificationReport {
        failure: check_certificate(cert).err(),
    }
}

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn check_certificate(cert: &WitnessCertificate) -> std::result::Result<(), String> {
    if cert.version != CERTIFICATE_VERSION {
        return fail(format!("unsupported version {}", cert.version));
    }
    let pr = &cert.problem;
    let n = pr.n;
    let xi = parse_polynomial(&pr.xi, n).map_err(|e| format!("problem polynomial: {e}"))?;
    let (k, m, weight) = check_problem(&xi, n, Some(pr.m)).map_err(|e| format!("problem: {e}"))?;
    if pr.k != k {
        return fail(format!("k = {} but ceil(n/2) = {k}", pr.k));
    }
    if pr.m != m {
        return fail(format!("m = {} is below the problem's minimum {m}", pr.m));
    }
    if pr.degree_2r != 2 * weight {
        return fail(format!(
            "degree mismatch: Xi has degree {}, header says {}",
            2 * weight,
            pr.degree_2r
        ));
    }
    let p = cert.prime;
    if p == 2 || !is_prime(p) {
        return fail(format!("{p} is not an odd prime"));
    }
    let field = PrimeField::new(p).map_err(|e| e.to_string())?;
    let bound = cert.witness.bound;
    if p <= bound {
        return fail(format!("prime {p} does not exceed N = {bound}"));
    }

    if cert.residues.len() != n as usize {
        return fail(format!("expected {n} residues, found {}", cert.residues.len()));
    }
    if cert.residues.iter().any(|&a| a == 0 || a >= p) {
        return fail("residue outside [1, p-1]");
    }
    let residues: Vec<i64> = cert.residues.iter().map(|&a| a as i64).collect();
    let rho = LinearRepData::new(p, &residues).map_err(|e| e.to_string())?;
    let xi_rep = RepPairs(cert.xi_rep.clone())
        .to_rep(p as u32, 1)
        .map_err(|e| format!("xi_rep: {e}"))?;

    // pullbacks from (residues, xi) alone
    let euler = euler_class(&rho).coefficient();
    if cert.pullbacks.euler != euler.value() as u64 {
        return fail("euler pullback mismatch");
    }
    if cert.pullbacks.l.len() != m as usize {
        return fail(format!("expected {m} L-pullbacks, found {}", cert.pullbacks.l.len()));
    }
    let mut point = BTreeMap::new();
    point.insert(Var::E(n), euler);
    for (pos, &(i, stored)) in cert.pullbacks.l.iter().enumerate() {
        if i != pos as u32 + 1 {
            return fail(format!("L-pullback index {i} out of order"));
        }
        let c = if i < k {
            l_class_linear(&rho, i)
        } else {
            pullback_l_nonlinear(&rho, &xi_rep, i)
        }
        .map_err(|e| format!("L-pullback at i = {i}: {e}"))?;
        if stored != c.coefficient().value() as u64 {
            return fail(format!("L-pullback mismatch at i = {i}"));
        }
        point.insert(Var::X(i), c.coefficient());
    }
    check_symmetry(&xi_rep, n)?;

    if cert.targets.len() != (m - k + 1) as usize {
        return fail(format!("expected {} targets, found {}", m - k + 1, cert.targets.len()));
    }
    for (i, &t) in (k..=m).zip(&cert.targets) {
        if t != point[&Var::X(i)].value() as u64 {
            return fail(format!("target mismatch at i = {i}"));
        }
    }

    // evaluation on the pullbacks
    let table = l_table(m);
    let xi_l = to_l_coordinates(&xi, &table).map_err(|e| e.to_string())?;
    let evaluation = xi_l
        .evaluate_mod(&field, &point)
        .map_err(|e| format!("evaluation: {e}"))?;
    if cert.evaluation != evaluation.value() as u64 {
        return fail("evaluation mismatch");
    }
    if evaluation.is_zero() {
        return fail("evaluation is zero");
    }

    // exact value at the witness point
    let free = free_indices(&xi_l, k, m);
    let z = &cert.witness.z;
    if z.len() != n as usize + free.len() {
        return fail(format!(
            "expected {} witness coordinates, found {}",
            n as usize + free.len(),
            z.len()
        ));
    }
    let z: Vec<Rational> = z
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_>>()
        .map_err(|e| format!("witness coordinate: {e}"))?;
    if z.iter().any(Zero::is_zero) {
        return fail("witness coordinate is zero");
    }
    let value = parse_rational(&cert.witness.value).map_err(|e| format!("witness value: {e}"))?;
    let exact = exact_value(&xi_l, n, k, &z, &free).map_err(|e| e.to_string())?;
    if exact != value {
        return fail("witness value mismatch");
    }
    if value.is_zero() {
        return fail("witness value is zero");
    }
    let floor = bound_floor(&xi_l, m).map_err(|e| e.to_string())?;
    match bound_for(floor, &z, &value) {
        Some(b) if b <= bound => {}
        _ => return fail(format!("N = {bound} does not make the witness a unit")),
    }
    for (j, q) in z.iter().enumerate().take(n as usize) {
        if field.from_rational(q).ok() != Some(field.elem(residues[j])) {
            return fail(format!("residue {} is not a_{} mod p", j + 1, j + 1));
        }
    }
    for (&i, q) in free.iter().zip(&z[n as usize..]) {
        if field.from_rational(q).ok() != Some(point[&Var::X(i)]) {
            return fail(format!("target at i = {i} is not the witness coordinate mod p"));
        }
    }
    if field.from_rational(&value).ok() != Some(evaluation) {
        return fail("evaluation is not Xi(z) mod p");
    }
    Ok(())
}

/// `conj(xi) = (-1)^n xi`, compared entrywise without arithmetic overflow.
fn check_symmetry(xi: &VirtualRep, n: u32) -> std::result::Result<(), String> {
    for (r, m) in xi.pairs() {
        let mirror = xi.multiplicity(-(r as i64));
        let ok = if n % 2 == 0 {
            mirror == m
        } else {
            m.checked_neg() == Some(mirror)
        };
        if !ok {
            return fail("xi violates conj(xi) = (-1)^n xi");
        }
    }
    Ok(())
}

/// `ell_i(a)` for rational `a`, by the truncated product of `t/tanh t`.
fn ell_rational(i: u32, a: &[Rational]) -> Rational {
    let f = tanh_series(i);
    let mut acc = vec![Rational::zero(); i as usize + 1];
    acc[0] = Rational::one();
    for x in a {
        let x2 = x * x;
        let mut next = vec![Rational::zero(); i as usize + 1];
        for (d1, c1) in acc.iter().enumerate() {
            let mut w = Rational::one();
            for (d2, fc) in f.iter().enumerate().take(i as usize + 1 - d1) {
                if d2 > 0 {
                    w = &w * &x2;
                }
                next[d1 + d2] += c1 * fc * &w;
            }
        }
        acc = next;
    }
    acc.swap_remove(i as usize)
}

/// `Xi(z)` computed from the L-coordinate form without expanding the
/// specialization.
fn exact_value(xi_l: &GradedPolynomial, n: u32, k: u32, z: &[Rational], free: &[u32]) -> Result<Rational> {
    let a = &z[..n as usize];
    let mut point: BTreeMap<Var, Rational> = BTreeMap::new();
    point.insert(Var::E(n), a.iter().fold(Rational::one(), |acc, x| acc * x));
    let used: BTreeSet<Var> = xi_l.used_variables();
    for v in used {
        if let Var::X(i) = v {
            if i < k {
                point.insert(v, ell_rational(i, a));
            }
        }
    }
    for (&i, q) in free.iter().zip(&z[n as usize..]) {
        point.insert(Var::X(i), q.clone());
    }
    xi_l.evaluate(&point)
}

/// Witness and certificates for the first `prime_count` odd primes above `N`.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub witness: WitnessPoint,
    pub certificates: Vec<WitnessCertificate>,
}

/// Runs the full pipeline; certificates are built in parallel, verified, and
/// returned in increasing prime order.
pub fn run_pipeline(problem: &DetectionProblem, prime_count: usize) -> Result<PipelineRun> {
    let witness = find_rational_witness(problem)?;
    let mut primes = Vec::with_capacity(prime_count);
    let mut q = witness.bound;
    for _ in 0..prime_count {
        q = next_odd_prime_after(q);
        primes.push(q);
    }
    let certificates = primes
        .par_iter()
        .map(|&p| {
            let cert = build_certificate(problem, &witness, p)?;
            match verify_certificate(&cert).failure() {
                None => Ok(cert),
                Some(why) => Err(Error::Verification(format!("p = {p}: {why}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PipelineRun { witness, certificates })
}

/// `Xi(z) mod p` for a witness, as used when cross-checking evaluations.
pub fn witness_value_mod(witness: &WitnessPoint, p: u64) -> Result<FpScalar> {
    PrimeField::new(p)?.from_rational(&witness.value)
}
