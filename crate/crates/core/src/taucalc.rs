//! Exact checks of the algebra of the matrices `τ_i = π_{s_i} − I`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dickson::{dickson_e, dickson_e_odd_over_x, DicksonQuery};
use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::graph::{Shape, Sign, SignedCoxeterGraph};
use crate::repmat::Representation;
use crate::words::{build_hat_word, evaluate};

/// Outcome of one identity check. Parameters are 1-based indices followed
/// by any exponent. `witness` holds the nonzero difference `lhs − rhs` of a
/// failed matrix identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: Vec<usize>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExactMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityReport {
    pub fn from_difference(identity: &str, parameters: Vec<usize>, diff: ExactMatrix) -> Self {
        let holds = diff.is_zero();
        IdentityReport {
            identity: identity.to_string(),
            parameters,
            holds,
            witness: (!holds).then_some(diff),
            detail: None,
        }
    }

    pub fn from_check(identity: &str, parameters: Vec<usize>, holds: bool, detail: impl Into<String>) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            parameters,
            holds,
            witness: None,
            detail: Some(detail.into()),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|p| p.to_string()).collect();
        write!(
            f,
            "{} {}({})",
            if self.holds { "PASS" } else { "FAIL" },
            self.identity,
            params.join(",")
        )?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

/// `τ_{i_1} ⋯ τ_{i_k}`; the empty product is `I`.
pub fn tau_product(rep: &Representation, indices: &[usize]) -> Result<ExactMatrix> {
    let mut acc = rep.identity().clone();
    for &i in indices {
        acc = &acc * rep.tau(i)?;
    }
    Ok(acc)
}

/// Every sub-identity of the basic τ algebra, for all indices and pairs,
/// with powers up to 6.
pub fn verify_tau_basic(rep: &Representation) -> Vec<IdentityReport> {
    let n = rep.n();
    let g = rep.graph();
    let id = rep.identity();
    let t = rep.taus();
    let mut out = Vec::new();
    for i in 0..n {
        let ti = &t[i];
        out.push(IdentityReport::from_difference(
            "tau_square",
            vec![i + 1],
            &(ti * ti) - &ti.scale_i64(-2),
        ));
        let one_plus = id + ti;
        out.push(IdentityReport::from_difference(
            "one_plus_tau_left",
            vec![i + 1],
            &(&one_plus * ti) + ti,
        ));
        out.push(IdentityReport::from_difference(
            "one_plus_tau_right",
            vec![i + 1],
            &(ti * &one_plus) + ti,
        ));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (ti, tj) = (&t[i], &t[j]);
            let tij = ti * tj;
            if g.m(i, j) == 2 {
                out.push(IdentityReport::from_difference("tau_orthogonal", vec![i + 1, j + 1], tij));
                continue;
            }
            let fi = g.sign(i).value();
            let fij = (g.sign(i) * g.sign(j)).value();
            let e = ExactMatrix::exchange(n, i, j);
            out.push(IdentityReport::from_difference(
                "tau_pair",
                vec![i + 1, j + 1],
                &tij - &(&e * tj).scale_i64(fi),
            ));
            out.push(IdentityReport::from_difference(
                "tau_sandwich",
                vec![i + 1, j + 1],
                &(&tij * ti) - &ti.scale_i64(fij),
            ));
            for k in 1..=6u64 {
                let coeff = if (k - 1) % 2 == 0 { 1 } else { fij };
                out.push(IdentityReport::from_difference(
                    "tau_power",
                    vec![i + 1, j + 1, k as usize],
                    &tij.pow(k) - &tij.scale_i64(coeff),
                ));
            }
        }
    }
    out
}

/// The closed form of a τ-chain:
/// `(−2)^ρ · ∏_{i_t ≠ i_{t+1}} f_{i_t} · E_{i_1,i_k} · τ_{i_k}`,
/// where `ρ` counts adjacent equal letters, or zero when two adjacent
/// letters commute.
pub fn tau_chain_closed_form(rep: &Representation, indices: &[usize]) -> Result<ExactMatrix> {
    let n = rep.n();
    let g = rep.graph();
    let (Some(&first), Some(&last)) = (indices.first(), indices.last()) else {
        return Err(Error::InvalidParameters("a tau chain needs at least one index".into()));
    };
    for &i in indices {
        rep.check_index(i)?;
    }
    let mut coeff = BigInt::one();
    for pair in indices.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a == b {
            coeff *= -2;
        } else if g.m(a, b) == 2 {
            return Ok(ExactMatrix::zero(n));
        } else {
            coeff *= g.sign(a).value();
        }
    }
    let e = ExactMatrix::exchange(n, first, last);
    Ok((&e * rep.tau(last)?).scale(&coeff))
}

pub fn verify_tau_chain(rep: &Representation, indices: &[usize]) -> Result<IdentityReport> {
    let closed = tau_chain_closed_form(rep, indices)?;
    let literal = tau_product(rep, indices)?;
    Ok(IdentityReport::from_difference("tau_chain", one_based(indices), &literal - &closed))
}

/// A nonzero τ-chain has the single nonzero row `i_1`, and that row is an
/// integer multiple of `ν_{i_k}`.
pub fn verify_row_support(rep: &Representation, indices: &[usize]) -> Result<IdentityReport> {
    let (Some(&first), Some(&last)) = (indices.first(), indices.last()) else {
        return Err(Error::InvalidParameters("a tau chain needs at least one index".into()));
    };
    let product = tau_product(rep, indices)?;
    let params = one_based(indices);
    if product.is_zero() {
        return Ok(IdentityReport::from_check("row_support", params, true, "zero product"));
    }
    let rows = product.nonzero_rows();
    if rows != [first] {
        return Ok(IdentityReport::from_check(
            "row_support",
            params,
            false,
            format!("nonzero rows {:?}", one_based(&rows)),
        ));
    }
    let nu = rep.nu(last)?;
    let row = product.row(first);
    let (ratio, rem) = row[last].div_rem(&nu.entries()[last]);
    let proportional = rem.is_zero()
        && row.iter().zip(nu.entries()).all(|(a, b)| *a == &ratio * b);
    let detail = if proportional {
        format!("row {} = {} * nu_{}", first + 1, ratio, last + 1)
    } else {
        format!("row {} is not an integer multiple of nu_{}", first + 1, last + 1)
    };
    Ok(IdentityReport::from_check("row_support", params, proportional, detail))
}

/// The letters `k` of the run from `start` up to `j` (cyclically on a cycle).
fn ascending_run(g: &SignedCoxeterGraph, start: usize, j: usize) -> Vec<usize> {
    match g.shape() {
        Shape::Cycle => (0..=g.cyclic_distance(start, j)).map(|t| (start + t) % g.n()).collect(),
        _ => (start..=j).collect(),
    }
}

/// `τ_{i1,j,i2} = Σ_{k1} Σ_{k2} τ_{k1} ⋯ τ_j ⋯ τ_{k2}`, with `k1` running
/// over `i1..j` and `k2` over `i2..j`.
pub fn tau_hat_sum(rep: &Representation, i1: usize, j: usize, i2: usize) -> Result<ExactMatrix> {
    let g = rep.graph();
    build_hat_word(g, i1, j, i2)?;
    // prefixes τ_{k1} ⋯ τ_j and suffixes τ_{j−1} ⋯ τ_{k2}
    let up = ascending_run(g, i1, j);
    let mut prefixes = Vec::with_capacity(up.len());
    let mut acc = rep.tau(j)?.clone();
    for &k in up.iter().rev().skip(1) {
        prefixes.push(acc.clone());
        acc = rep.tau(k)? * &acc;
    }
    prefixes.push(acc);
    let down = ascending_run(g, i2, j);
    let mut suffixes = Vec::with_capacity(down.len());
    let mut acc = rep.identity().clone();
    for &k in down.iter().rev().skip(1) {
        suffixes.push(acc.clone());
        acc = &acc * rep.tau(k)?;
    }
    suffixes.push(acc);
    let mut total = ExactMatrix::zero(rep.n());
    for p in &prefixes {
        for q in &suffixes {
            total = &total + &(p * q);
        }
    }
    Ok(total)
}

/// The literal double sum, one chain product per term.
pub fn tau_hat_sum_naive(rep: &Representation, i1: usize, j: usize, i2: usize) -> Result<ExactMatrix> {
    let g = rep.graph();
    build_hat_word(g, i1, j, i2)?;
    let mut total = ExactMatrix::zero(rep.n());
    for &k1 in &ascending_run(g, i1, j) {
        for &k2 in &ascending_run(g, i2, j) {
            let w = build_hat_word(g, k1, j, k2)?;
            total = &total + &tau_product(rep, w.letters())?;
        }
    }
    Ok(total)
}

/// `π(s_{i1,j,i2}) = I + τ_{i1,j,i2}`.
/// Both ends must lie strictly below the peak `j`, unless `i1 = j = i2`.
pub fn verify_tau_middle(rep: &Representation, i1: usize, j: usize, i2: usize) -> Result<IdentityReport> {
    if (i1 == j) != (i2 == j) {
        return Err(Error::InvalidParameters(format!(
            "tau middle ({},{},{}) needs i1 != j and i2 != j, or i1 = j = i2",
            i1 + 1,
            j + 1,
            i2 + 1
        )));
    }
    let word = build_hat_word(rep.graph(), i1, j, i2)?;
    let lhs = evaluate(rep, &word)?;
    let rhs = rep.identity() + &tau_hat_sum(rep, i1, j, i2)?;
    Ok(IdentityReport::from_difference("tau_middle", vec![i1 + 1, j + 1, i2 + 1], &lhs - &rhs))
}

/// Every `(i1, j, i2)` accepted by [`verify_tau_middle`]: `(j, j, j)`, and
/// both ends strictly before `j` (cyclically at distance at most `n − 2`).
pub fn tau_middle_triples(g: &SignedCoxeterGraph) -> Result<Vec<(usize, usize, usize)>> {
    let n = g.n();
    let mut out = Vec::new();
    for j in 0..n {
        out.push((j, j, j));
        let ends: Vec<usize> = match g.shape() {
            Shape::Line => (0..j).collect(),
            Shape::Cycle => (1..=n - 2).map(|d| (j + n - d) % n).collect(),
            Shape::General => return Err(Error::WrongShape { expected: "line or cycle" }),
        };
        for &i1 in &ends {
            for &i2 in &ends {
                out.push((i1, j, i2));
            }
        }
    }
    Ok(out)
}

/// `κ_{i,j}`: the product of the signs strictly between `i` and `j` going
/// forward, plus the product going backward.
pub fn compute_kappa(g: &SignedCoxeterGraph, i: usize, j: usize) -> Result<i64> {
    if g.shape() != Shape::Cycle {
        return Err(Error::WrongShape { expected: "cycle" });
    }
    let n = g.n();
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx + 1, n });
        }
    }
    if i == j {
        return Err(Error::InvalidParameters("kappa needs two distinct vertices".into()));
    }
    let mut forward = Sign::Plus;
    let mut k = g.succ(i);
    while k != j {
        forward = forward * g.sign(k);
        k = g.succ(k);
    }
    let mut backward = Sign::Plus;
    let mut k = g.pred(i);
    while k != j {
        backward = backward * g.sign(k);
        k = g.pred(k);
    }
    Ok(forward.value() + backward.value())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DicksonMode {
    TwoGen,
    Line,
    Cycle,
}

impl DicksonMode {
    fn label(self) -> &'static str {
        match self {
            DicksonMode::TwoGen => "two_gen",
            DicksonMode::Line => "line",
            DicksonMode::Cycle => "cycle",
        }
    }
}

/// The two matrices whose products are compared, the Dickson evaluation
/// point `x`, and `α = f_i f_j`.
struct DicksonSetup {
    left: ExactMatrix,
    right: ExactMatrix,
    x: i64,
    alpha: i64,
    commutator_override: Option<ExactMatrix>,
}

fn dickson_setup(rep: &Representation, mode: DicksonMode, i: usize, j: usize) -> Result<DicksonSetup> {
    let g = rep.graph();
    let n = rep.n();
    rep.check_index(i)?;
    rep.check_index(j)?;
    let alpha = (g.sign(i) * g.sign(j)).value();
    match mode {
        DicksonMode::TwoGen => {
            if g.m(i, j) != 3 {
                return Err(Error::InvalidParameters(format!(
                    "two_gen needs an edge between {} and {}",
                    i + 1,
                    j + 1
                )));
            }
            let (ti, tj) = (rep.tau(i)?, rep.tau(j)?);
            let e = ExactMatrix::exchange(n, i, j);
            let comm = &e * &(&tj.scale_i64(g.sign(i).value()) - &ti.scale_i64(g.sign(j).value()));
            Ok(DicksonSetup {
                left: ti.clone(),
                right: tj.clone(),
                x: 1,
                alpha,
                commutator_override: Some(comm),
            })
        }
        DicksonMode::Line => {
            if g.shape() != Shape::Line {
                return Err(Error::WrongShape { expected: "line" });
            }
            if i >= j {
                return Err(Error::InvalidParameters("line mode needs i < j".into()));
            }
            Ok(DicksonSetup {
                left: rep.tau(i)?.clone(),
                right: tau_hat_sum(rep, i + 1, j, i + 1)?,
                x: 1,
                alpha,
                commutator_override: None,
            })
        }
        DicksonMode::Cycle => {
            if g.shape() != Shape::Cycle {
                return Err(Error::WrongShape { expected: "cycle" });
            }
            if i == j || j == g.pred(i) {
                return Err(Error::InvalidParameters("cycle mode needs j != i and j != i-1".into()));
            }
            Ok(DicksonSetup {
                left: tau_hat_sum(rep, g.succ(j), i, g.succ(j))?,
                right: tau_hat_sum(rep, g.succ(i), j, g.succ(i))?,
                x: compute_kappa(g, i, j)?,
                alpha,
                commutator_override: None,
            })
        }
    }
}

/// Successive pairs `((AB)^r, (BA)^r)` for `r = 1..=max_r`, with
/// `A = I + X`, `B = I + Y`.
fn product_powers(rep: &Representation, s: &DicksonSetup, max_r: u64) -> (ExactMatrix, ExactMatrix, Vec<(ExactMatrix, ExactMatrix)>) {
    let a = rep.identity() + &s.left;
    let b = rep.identity() + &s.right;
    let ab = &a * &b;
    let ba = &b * &a;
    let mut out = Vec::with_capacity(max_r as usize);
    let (mut p, mut q) = (ab.clone(), ba.clone());
    for _ in 0..max_r {
        out.push((p.clone(), q.clone()));
        p = &p * &ab;
        q = &q * &ba;
    }
    (a, b, out)
}

fn commutator(s: &DicksonSetup) -> ExactMatrix {
    match &s.commutator_override {
        Some(c) => c.clone(),
        None => &(&s.left * &s.right) - &(&s.right * &s.left),
    }
}

fn alpha_pow(alpha: i64, k: u64) -> BigInt {
    if alpha == 1 || k.is_multiple_of(2) {
        BigInt::one()
    } else {
        BigInt::from(-1)
    }
}

/// Even and odd Dickson-coefficient identities for `r = 1..=max_r`:
///
/// `(AB)^r − (BA)^r = α^{r−1} E_{2r−1}(x, α) (XY − YX)` and
/// `(AB)^r A − (BA)^r B = α^r E_{2r}(x, α) (X − Y)`,
///
/// where `A = I + X`, `B = I + Y` and the mode picks `X`, `Y` and `x`.
pub fn verify_dickson_up_to(
    rep: &Representation,
    mode: DicksonMode,
    i: usize,
    j: usize,
    max_r: u64,
) -> Result<Vec<(IdentityReport, IdentityReport)>> {
    let s = dickson_setup(rep, mode, i, j)?;
    let q = DicksonQuery::new(s.x, s.alpha)?;
    let comm = commutator(&s);
    let diff = &s.left - &s.right;
    let (a, b, powers) = product_powers(rep, &s, max_r);
    let detail = format!("x={} alpha={}", s.x, s.alpha);
    let mut out = Vec::new();
    for (k, (ab, ba)) in powers.iter().enumerate() {
        let r = k as u64 + 1;
        let lhs_even = ab - ba;
        let lhs_odd = &(ab * &a) - &(ba * &b);
        let c_even = alpha_pow(s.alpha, r - 1) * dickson_e(2 * r as usize - 1, q);
        let c_odd = alpha_pow(s.alpha, r) * dickson_e(2 * r as usize, q);
        let params = vec![i + 1, j + 1, r as usize];
        out.push((
            IdentityReport::from_difference(
                &format!("dickson_{}_even", mode.label()),
                params.clone(),
                &lhs_even - &comm.scale(&c_even),
            )
            .with_detail(detail.clone()),
            IdentityReport::from_difference(&format!("dickson_{}_odd", mode.label()), params, &lhs_odd - &diff.scale(&c_odd))
                .with_detail(detail.clone()),
        ));
    }
    Ok(out)
}

pub fn verify_dickson_identity(
    rep: &Representation,
    mode: DicksonMode,
    i: usize,
    j: usize,
    r: u64,
) -> Result<(IdentityReport, IdentityReport)> {
    if r == 0 {
        return Err(Error::InvalidParameters("r must be positive".into()));
    }
    Ok(verify_dickson_up_to(rep, mode, i, j, r)?.pop().expect("r >= 1"))
}

/// The even cycle identity with `E_{2r−1}(κ, α)` replaced by the quotient
/// `E_{2r−1}(κ, α) / κ`, which is the form that holds for every `κ`.
pub fn verify_cycle_dickson_normalized_up_to(rep: &Representation, i: usize, j: usize, max_r: u64) -> Result<Vec<IdentityReport>> {
    let s = dickson_setup(rep, DicksonMode::Cycle, i, j)?;
    let q = DicksonQuery::new(s.x, s.alpha)?;
    let comm = commutator(&s);
    let (_, _, powers) = product_powers(rep, &s, max_r);
    let mut out = Vec::new();
    for (k, (ab, ba)) in powers.iter().enumerate() {
        let r = k as u64 + 1;
        let c = alpha_pow(s.alpha, r - 1) * dickson_e_odd_over_x(2 * r as usize - 1, q);
        out.push(
            IdentityReport::from_difference(
                "dickson_cycle_even_normalized",
                vec![i + 1, j + 1, r as usize],
                &(ab - ba) - &comm.scale(&c),
            )
            .with_detail(format!("x={} alpha={}", s.x, s.alpha)),
        );
    }
    Ok(out)
}

pub fn verify_cycle_dickson_normalized(rep: &Representation, i: usize, j: usize, r: u64) -> Result<IdentityReport> {
    if r == 0 {
        return Err(Error::InvalidParameters("r must be positive".into()));
    }
    Ok(verify_cycle_dickson_normalized_up_to(rep, i, j, r)?.pop().expect("r >= 1"))
}

/// All Dickson reports applicable to the graph, for exponents `1..=max_r`.
pub fn dickson_suite(rep: &Representation, max_r: u64) -> Result<Vec<IdentityReport>> {
    let g = rep.graph();
    let n = rep.n();
    let mut out = Vec::new();
    let push = |mode, i, j, out: &mut Vec<IdentityReport>| -> Result<()> {
        for (e, o) in verify_dickson_up_to(rep, mode, i, j, max_r)? {
            out.push(e);
            out.push(o);
        }
        Ok(())
    };
    for (i, j) in g.edges() {
        push(DicksonMode::TwoGen, i, j, &mut out)?;
    }
    match g.shape() {
        Shape::Line => {
            for i in 0..n {
                for j in i + 1..n {
                    push(DicksonMode::Line, i, j, &mut out)?;
                }
            }
        }
        Shape::Cycle => {
            for i in 0..n {
                for j in 0..n {
                    if j != i && j != g.pred(i) {
                        push(DicksonMode::Cycle, i, j, &mut out)?;
                    }
                }
            }
        }
        Shape::General => {}
    }
    Ok(out)
}

/// A random nonzero τ-chain: a walk that stays put or moves to a neighbour.
fn random_chain(g: &SignedCoxeterGraph, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = g.n();
    let len = rng.gen_range(1..=4);
    let mut v = vec![rng.gen_range(0..n)];
    while v.len() < len {
        let cur = *v.last().expect("nonempty");
        let mut options = vec![cur];
        options.extend((0..n).filter(|&k| g.is_adjacent(cur, k)));
        v.push(options[rng.gen_range(0..options.len())]);
    }
    v
}

/// Basis of the rational kernel of the linear map sending a coefficient
/// vector to `Σ c_k M_k`.
fn kernel_basis(mats: &[ExactMatrix]) -> Vec<Vec<BigRational>> {
    let cols = mats.len();
    let Some(first) = mats.first() else {
        return Vec::new();
    };
    let n = first.dim();
    let mut rows: Vec<Vec<BigRational>> = (0..n * n)
        .map(|e| {
            mats.iter()
                .map(|m| BigRational::from_integer(m.get(e / n, e % n).clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let factor = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[k].iter_mut().zip(&pivot_row) {
                    *v = &*v - &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}

fn sum_of(chains: &[(Vec<usize>, BigInt, ExactMatrix)], n: usize, keep: impl Fn(&[usize]) -> bool) -> ExactMatrix {
    chains
        .iter()
        .filter(|(w, _, _)| keep(w))
        .fold(ExactMatrix::zero(n), |acc, (_, c, m)| &acc + &m.scale(c))
}

/// A random vanishing combination of τ-chains splits into vanishing groups
/// sharing the first letter, and, on a non-degenerate form, into vanishing
/// groups sharing both the first and the last letter. On the all-plus
/// triangle the three row sums `τ_p + Σ_q τ_p τ_q` and their total are
/// checked as well.
pub fn verify_sum_support(rep: &Representation, seed: u64) -> Result<Vec<IdentityReport>> {
    let g = rep.graph();
    let n = rep.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = n * n + 4;
    let words: Vec<Vec<usize>> = (0..count).map(|_| random_chain(g, &mut rng)).collect();
    let mats = words
        .iter()
        .map(|w| tau_product(rep, w))
        .collect::<Result<Vec<_>>>()?;
    let basis = kernel_basis(&mats);
    let mut coeffs = vec![BigRational::zero(); count];
    for b in &basis {
        let weight = BigRational::from_integer(BigInt::from(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }));
        for (c, v) in coeffs.iter_mut().zip(b) {
            *c += &weight * v;
        }
    }
    let denom = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let chains: Vec<(Vec<usize>, BigInt, ExactMatrix)> = words
        .into_iter()
        .zip(coeffs)
        .zip(mats)
        .map(|((w, c), m)| {
            let int = (c * BigRational::from_integer(denom.clone())).to_integer();
            (w, int, m)
        })
        .collect();
    let nonzero_terms = chains.iter().filter(|(_, c, _)| !c.is_zero()).count();
    let mut out = Vec::new();
    let total = sum_of(&chains, n, |_| true);
    out.push(
        IdentityReport::from_difference("vanishing_combination", vec![], total)
            .with_detail(format!("{nonzero_terms} terms, kernel dimension {}", basis.len())),
    );
    for p in 0..n {
        let group = sum_of(&chains, n, |w| w[0] == p);
        out.push(IdentityReport::from_difference("sum_by_first_letter", vec![p + 1], group));
    }
    if !rep.is_degenerate() {
        for p in 0..n {
            for q in 0..n {
                let group = sum_of(&chains, n, |w| w[0] == p && *w.last().expect("nonempty") == q);
                out.push(IdentityReport::from_difference("sum_by_first_and_last_letter", vec![p + 1, q + 1], group));
            }
        }
    }
    if g.shape() == Shape::Cycle && n == 3 && g.all_signs(Sign::Plus) {
        let mut nine = ExactMatrix::zero(n);
        for p in 0..n {
            let mut s = rep.tau(p)?.clone();
            for q in (0..n).filter(|&q| q != p) {
                s = &s + &tau_product(rep, &[p, q])?;
            }
            nine = &nine + &s;
            out.push(IdentityReport::from_difference("triangle_row_sum", vec![p + 1], s));
        }
        out.push(IdentityReport::from_difference("triangle_total_sum", vec![], nine));
    }
    Ok(out)
}
