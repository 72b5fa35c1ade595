//! Flag statistics, the ab-index `Ψ`, the cd-index `Φ`, the local cd-index
//! `ℓ^Φ` and the decomposition of `Φ(Γ)` along a join-admissible element.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cylinder::{self, CylinderError, JoinTriple};
use crate::linalg;
use crate::ncpoly::{self, Alphabet, NCPoly};
use crate::poset::{self, IntervalKind, PosetError, RankedPoset};

#[derive(Debug, Error)]
pub enum CdError {
    #[error("poset needs a unique minimum and maximum and at least two elements")]
    NotBounded,
    #[error("flag set {0:?} is not a subset of the interior ranks")]
    BadFlag(Vec<usize>),
    #[error("no cd-expression exists; the poset is not Eulerian")]
    NoCdExpression,
    #[error("poset is not near-Eulerian")]
    NotNearEulerian,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("non-integral result {0}")]
    NonIntegral(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Cylinder(#[from] CylinderError),
}

/// Bounded poset data: bottom, top and `n` with `rank(B) = n + 1`, together
/// with the rank of each element relative to `0̂`.
struct Bounded {
    bottom: usize,
    top: usize,
    n: usize,
    rel: Vec<i64>,
}

fn bounded(b: &RankedPoset) -> Result<Bounded, CdError> {
    let (Some(bottom), Some(top)) = (b.poset.bottom(), b.poset.top()) else {
        return Err(CdError::NotBounded);
    };
    if b.len() < 2 {
        return Err(CdError::NotBounded);
    }
    let rel: Vec<i64> = b.poset.elements().map(|i| b.rank_of(i) - b.rank_of(bottom)).collect();
    Ok(Bounded {
        bottom,
        top,
        n: (rel[top] - 1) as usize,
        rel,
    })
}

/// `f_S`: maximal chains of `{z : ρ(z) − ρ(0̂) ∈ S} ∪ {0̂, 1̂}`.
pub fn flag_count(b: &RankedPoset, s: &[usize]) -> Result<BigInt, CdError> {
    let bd = bounded(b)?;
    if s.iter().any(|&i| i == 0 || i > bd.n) {
        return Err(CdError::BadFlag(s.to_vec()));
    }
    let mut mask = vec![false; bd.n + 2];
    mask[0] = true;
    mask[bd.n + 1] = true;
    for &i in s {
        mask[i] = true;
    }
    Ok(flag_count_masked(b, &bd, &mask))
}

fn flag_count_masked(b: &RankedPoset, bd: &Bounded, mask: &[bool]) -> BigInt {
    let mut order: Vec<usize> = b
        .poset
        .elements()
        .filter(|&z| (0..=bd.n as i64 + 1).contains(&bd.rel[z]) && mask[bd.rel[z] as usize])
        .collect();
    order.sort_by_key(|&z| bd.rel[z]);
    let mut count = vec![BigInt::zero(); b.len()];
    count[bd.bottom] = BigInt::one();
    for (k, &z) in order.iter().enumerate() {
        if z == bd.bottom {
            continue;
        }
        // Maximal chains of the selected poset visit every selected rank.
        let prev = (0..bd.rel[z]).rev().find(|&r| mask[r as usize]).unwrap();
        let mut total = BigInt::zero();
        for &w in &order[..k] {
            if bd.rel[w] == prev && b.poset.lt(w, z) {
                total += &count[w];
            }
        }
        count[z] = total;
    }
    count[bd.top].clone()
}

/// Every flag count, indexed by the bitmask of `S` (bit `i-1` for rank `i`).
pub fn flag_vector(b: &RankedPoset) -> Result<Vec<BigInt>, CdError> {
    let bd = bounded(b)?;
    let n = bd.n;
    Ok((0..1usize << n)
        .map(|m| {
            let mut mask = vec![false; n + 2];
            mask[0] = true;
            mask[n + 1] = true;
            for i in 0..n {
                mask[i + 1] = m >> i & 1 == 1;
            }
            flag_count_masked(b, &bd, &mask)
        })
        .collect())
}

/// `Ψ(B) = Σ_S f_S w_S` with `w_i = b` for `i ∈ S` and `a − b` otherwise.
pub fn ab_polynomial(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let f = flag_vector(b)?;
    let n = bounded(b)?.n;
    let a_minus_b = &NCPoly::a() - &NCPoly::b();
    let mut psi = NCPoly::zero(Alphabet::AB);
    for (m, fs) in f.iter().enumerate() {
        if fs.is_zero() {
            continue;
        }
        let mut w = NCPoly::one(Alphabet::AB);
        for i in 0..n {
            w = if m >> i & 1 == 1 { &w * &NCPoly::b() } else { &w * &a_minus_b };
        }
        psi = &psi + &w.scale(&BigRational::from_integer(fs.clone()));
    }
    Ok(psi)
}

fn ab_index(w: &[u8]) -> usize {
    w.iter().fold(0, |acc, &l| acc * 2 + l as usize)
}

/// Converts an ab-polynomial homogeneous of degree `n` into `c,d`, or
/// `None` when no cd-expression exists.
pub fn ab_to_cd(psi: &NCPoly, n: usize) -> Option<NCPoly> {
    let words = ncpoly::cd_words(n);
    let rows = 1usize << n;
    let mut a = vec![vec![BigRational::zero(); words.len()]; rows];
    for (j, w) in words.iter().enumerate() {
        let e = ncpoly::expand_cd(&NCPoly::monomial(Alphabet::CD, w.clone(), BigRational::one()));
        for (ab, v) in e.terms() {
            a[ab_index(ab)][j] = v.clone();
        }
    }
    let mut rhs = vec![BigRational::zero(); rows];
    for (w, v) in psi.terms() {
        if w.len() != n {
            return None;
        }
        rhs[ab_index(w)] = v.clone();
    }
    let x = linalg::solve(&a, &rhs)?;
    let mut phi = NCPoly::zero(Alphabet::CD);
    for (w, v) in words.into_iter().zip(x) {
        phi.add_term(w, v);
    }
    Some(phi)
}

/// `Φ(B)`, the unique cd-polynomial expanding to `Ψ(B)`.
pub fn cd_index(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let n = bounded(b)?.n;
    let psi = ab_polynomial(b)?;
    ab_to_cd(&psi, n).ok_or(CdError::NoCdExpression)
}

pub use ncpoly::{derivation_d, derivation_g, derivation_gprime, expand_cd};

/// `Σ_{0̂<z<1̂} Φ([0̂,z]) d Φ([z,1̂])`, which equals `D(Φ(B))` for Eulerian `B`.
pub fn derivation_chain_sum(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let bd = bounded(b)?;
    let mut out = NCPoly::zero(Alphabet::CD);
    for z in b.poset.elements().filter(|&z| z != bd.bottom && z != bd.top) {
        let lower = interval(b, bd.bottom, z)?;
        let upper = interval(b, z, bd.top)?;
        out = &out + &(&(&cd_index(&lower)? * &NCPoly::d()) * &cd_index(&upper)?);
    }
    Ok(out)
}

/// Closed interval `[z, z']` with the inherited rank.
pub fn interval(b: &RankedPoset, z: usize, z2: usize) -> Result<RankedPoset, CdError> {
    Ok(b.induced(&b.poset.interval_elements(z, z2, IntervalKind::Closed)?))
}

/// `Σ̃B` and `∂B̄` of a near-Eulerian poset.
fn suspension_parts(b: &RankedPoset) -> Result<(RankedPoset, RankedPoset), CdError> {
    let (sigma, _) = poset::semisuspension(&b.poset, &b.rank).map_err(|_| CdError::NotNearEulerian)?;
    let bd = b.induced(&poset::near_eulerian_boundary(&b.poset));
    let closed = bd.adjoin_max().map_err(|_| CdError::NotNearEulerian)?;
    Ok((sigma, closed))
}

/// `ℓ^Φ(B) = Φ(Σ̃B) − Φ(∂B̄)c`.
pub fn local_cd_index(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let (sigma, closed) = suspension_parts(b)?;
    Ok(&cd_index(&sigma)? - &(&cd_index(&closed)? * &NCPoly::c()))
}

/// `ℓ^Ψ(B) = Ψ(Σ̃B) − Ψ(∂B̄)(a + b)`, the ab-form of the local cd-index.
pub fn local_ab_polynomial(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let (sigma, closed) = suspension_parts(b)?;
    let c = &NCPoly::a() + &NCPoly::b();
    Ok(&ab_polynomial(&sigma)? - &(&ab_polynomial(&closed)? * &c))
}

/// `Ψ(B) = Ψ(Σ̃B) − Ψ(∂B̄)b` for near-Eulerian `B`; it agrees with the flag
/// ab-index of `B ∪ {1̂}` and satisfies `Ψ(B) = ℓ^Ψ(B) + Ψ(∂B̄)a`.
pub fn ab_polynomial_relative(b: &RankedPoset) -> Result<NCPoly, CdError> {
    let (sigma, closed) = suspension_parts(b)?;
    Ok(&ab_polynomial(&sigma)? - &(&ab_polynomial(&closed)? * &NCPoly::b()))
}

/// The pieces of the decomposition of `Φ(Γ)` along `σ : X → Y = MAP(Γ, q)`.
#[derive(Clone, Debug)]
pub struct FormulaTerms {
    /// `ℓ^Φ(X)`.
    pub local: NCPoly,
    /// `Φ(∂X̄)c`.
    pub boundary: NCPoly,
    /// `Φ(X̄_{≤0̂_Y}) c Φ(Y)`.
    pub bottom: NCPoly,
    /// `(ℓ^Φ(X_{≤y})c + Φ(X̄_{<y})d) Φ([y,1̂_Y])` for each `0̂_Y < y < 1̂_Y`,
    /// keyed by the label of `y`.
    pub interior: Vec<(String, NCPoly)>,
}

impl FormulaTerms {
    /// The bracketed sum that gets halved.
    pub fn bracket(&self) -> NCPoly {
        self.interior
            .iter()
            .fold(&self.boundary + &self.bottom, |acc, (_, p)| &acc + p)
    }

    pub fn half_bracket(&self) -> NCPoly {
        self.bracket().half()
    }

    pub fn rhs(&self) -> NCPoly {
        &self.local + &self.half_bracket()
    }

    /// The halved sum and the total both have integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.half_bracket().has_integer_coefficients() && self.rhs().has_integer_coefficients()
    }

    /// Every summand polynomial has nonnegative coefficients.
    pub fn summands_nonnegative(&self) -> bool {
        self.local.is_nonnegative()
            && self.boundary.is_nonnegative()
            && self.bottom.is_nonnegative()
            && self.interior.iter().all(|(_, p)| p.is_nonnegative())
    }

    pub fn summands(&self) -> Vec<(String, NCPoly)> {
        let mut out = vec![
            ("local".to_string(), self.local.clone()),
            ("boundary".to_string(), self.boundary.clone()),
            ("bottom".to_string(), self.bottom.clone()),
        ];
        out.extend(self.interior.iter().cloned());
        out
    }
}

/// Evaluates every term of the decomposition for `(Γ, ρ, q)`.
pub fn cd_formula_terms(t: &JoinTriple) -> Result<FormulaTerms, CdError> {
    let g = &t.gamma;
    if !g.is_eulerian_positive_rank() {
        return Err(CdError::Precondition("Γ must be Eulerian of positive rank".into()));
    }
    if Some(t.q) == g.poset.bottom() || Some(t.q) == g.poset.top() {
        return Err(CdError::Precondition("q must differ from the minimum and maximum".into()));
    }
    if !g.poset.is_join_admissible(t.q) {
        return Err(CdError::Precondition(format!("{} is not join-admissible", t.q_label())));
    }
    let sigma = cylinder::map(t)?;
    let (x, y) = (&sigma.source, &sigma.target);
    let (y0, y1) = (y.poset.bottom().unwrap(), y.poset.top().unwrap());
    let c = NCPoly::c();
    let d = NCPoly::d();

    let local = local_cd_index(x)?;
    let (_, bd_closed) = suspension_parts(x)?;
    let boundary = &cd_index(&bd_closed)? * &c;

    // Elements of X whose image lies below `yy` in Y.
    let fibre_below = |yy: usize, strict: bool| -> Vec<usize> {
        x.poset
            .elements()
            .filter(|&z| {
                let s = sigma.apply(z);
                if strict {
                    y.poset.lt(s, yy)
                } else {
                    y.poset.le(s, yy)
                }
            })
            .collect()
    };

    let x_bottom = x.induced(&fibre_below(y0, false)).adjoin_max()?;
    let bottom = &(&cd_index(&x_bottom)? * &c) * &cd_index(y)?;

    let mut interior = Vec::new();
    for yy in y.poset.elements().filter(|&e| e != y0 && e != y1) {
        let le = x.induced(&fibre_below(yy, false));
        let lt = x.induced(&fibre_below(yy, true)).adjoin_max()?;
        let head = &(&local_cd_index(&le)? * &c) + &(&cd_index(&lt)? * &d);
        let tail = cd_index(&interval(y, yy, y1)?)?;
        interior.push((y.poset.label(yy).to_string(), &head * &tail));
    }
    Ok(FormulaTerms {
        local,
        boundary,
        bottom,
        interior,
    })
}

/// The right-hand side of the decomposition; fails unless it is integral.
pub fn cd_formula_rhs(t: &JoinTriple) -> Result<NCPoly, CdError> {
    let terms = cd_formula_terms(t)?;
    if !terms.is_integral() {
        return Err(CdError::NonIntegral(terms.rhs().to_string()));
    }
    Ok(terms.rhs())
}
