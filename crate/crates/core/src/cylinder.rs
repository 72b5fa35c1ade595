//! Non-Hausdorff mapping cylinders and the correspondence between strong
//! formal subdivisions and triples `(Γ, ρ, q)` with `q` a non-minimal
//! join-admissible element.
//!
//! Cylinder elements are labelled `X:ℓ` and `Y:ℓ`, so going back and forth
//! gives literally equal objects once the other side is tagged the same way
//! ([`tag_map`], [`tag_triple`], [`SfsSquare::tagged`]).

use std::collections::HashSet;

use thiserror::Error;

use crate::poset::{PosetError, Poset, RankFunction, RankedPoset};
use crate::subdivision::{self, PosetMap, SfsError, SfsMethod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CylinderError {
    #[error("map is not order-preserving")]
    NotOrderPreserving,
    #[error("input map is not a strong formal subdivision: {0}")]
    NotSfs(String),
    #[error("Γ is not lower Eulerian")]
    NotLowerEulerian,
    #[error("Γ is not locally Eulerian")]
    NotLocallyEulerian,
    #[error("q is the minimum of Γ")]
    QIsMinimum,
    #[error("`{0}` is not join-admissible")]
    NotJoinAdmissible(String),
    #[error("upper ideal is not join-admissible or contains a minimal element")]
    BadIdeal,
    #[error("square does not commute at `{0}`")]
    NotCommutative(String),
    #[error("square endpoints do not match")]
    EndpointMismatch,
    #[error("morphism condition fails: {0}")]
    NotMorphism(String),
    #[error("result violates its own postcondition: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Sfs(#[from] SfsError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A lower Eulerian ranked poset `Γ` with a distinguished element `q`.
#[derive(Clone, Debug)]
pub struct JoinTriple {
    pub gamma: RankedPoset,
    pub q: usize,
}

impl PartialEq for JoinTriple {
    fn eq(&self, other: &Self) -> bool {
        self.gamma == other.gamma && self.gamma.poset.label(self.q) == other.gamma.poset.label(other.q)
    }
}

impl Eq for JoinTriple {}

impl JoinTriple {
    pub fn new(gamma: RankedPoset, q: usize) -> Result<Self, CylinderError> {
        if q >= gamma.len() {
            return Err(PosetError::OutOfRange(q).into());
        }
        Ok(JoinTriple { gamma, q })
    }

    pub fn with_label(gamma: RankedPoset, q: &str) -> Result<Self, CylinderError> {
        let q = gamma.poset.element(q)?;
        Ok(JoinTriple { gamma, q })
    }

    pub fn q_label(&self) -> &str {
        self.gamma.poset.label(self.q)
    }

    /// Γ lower Eulerian, `q` join-admissible and not the minimum.
    pub fn validate(&self) -> Result<(), CylinderError> {
        if !self.gamma.is_lower_eulerian() {
            return Err(CylinderError::NotLowerEulerian);
        }
        if self.gamma.poset.bottom() == Some(self.q) {
            return Err(CylinderError::QIsMinimum);
        }
        if !self.gamma.poset.is_join_admissible(self.q) {
            return Err(CylinderError::NotJoinAdmissible(self.q_label().to_string()));
        }
        Ok(())
    }
}

/// `Cyl(σ)`: `X ⊔ Y` with `x < y` whenever `σ(x) <= y`, ranked by `ρ_X` on
/// `X` and `ρ_Y + 1` on `Y`. `X` occupies the first indices.
pub fn mapping_cylinder(m: &PosetMap) -> Result<RankedPoset, CylinderError> {
    if !m.is_order_preserving() {
        return Err(CylinderError::NotOrderPreserving);
    }
    let (xp, yp) = (&m.source.poset, &m.target.poset);
    let nx = xp.len();
    let mut labels: Vec<String> = xp.labels().iter().map(|l| format!("X:{l}")).collect();
    labels.extend(yp.labels().iter().map(|l| format!("Y:{l}")));
    let p = Poset::from_strict_order(labels, |a, b| match (a < nx, b < nx) {
        (true, true) => xp.lt(a, b),
        (false, false) => yp.lt(a - nx, b - nx),
        (true, false) => yp.le(m.apply(a), b - nx),
        (false, true) => false,
    })?;
    let mut ranks = m.source.rank.values().to_vec();
    ranks.extend(m.target.rank.values().iter().map(|r| r + 1));
    Ok(RankedPoset::new(p, RankFunction::new(ranks))?)
}

fn require_sfs(m: &PosetMap) -> Result<(), CylinderError> {
    match subdivision::sfs_violation(m, SfsMethod::Eq31) {
        Ok(None) => Ok(()),
        Ok(Some(v)) => Err(CylinderError::NotSfs(m.describe(&v))),
        Err(e) => Err(CylinderError::NotSfs(e.to_string())),
    }
}

/// `CYL(σ) = (Cyl(σ), ρ, 0̂_Y)`.
pub fn cyl(m: &PosetMap) -> Result<JoinTriple, CylinderError> {
    require_sfs(m)?;
    let gamma = mapping_cylinder(m)?;
    let by = m.target.poset.bottom().ok_or(PosetError::NoUniqueMinimum)?;
    let q = m.source.len() + by;
    let t = JoinTriple { gamma, q };
    t.validate().map_err(|e| CylinderError::Postcondition(e.to_string()))?;
    Ok(t)
}

/// `MAP(Γ, ρ, q): Γ ∖ Γ_{>=q} → Γ_{>=q}`, `x ↦ x ∨ q`, with the target rank
/// lowered by one.
pub fn map(t: &JoinTriple) -> Result<PosetMap, CylinderError> {
    t.validate()?;
    let g = &t.gamma.poset;
    let upper = g.up_set(t.q);
    split_by_ideal(&t.gamma, &upper, |z| g.join(z, t.q).unwrap(), true)
}

/// Builds `Γ ∖ I → I` from a join function, then checks the result.
fn split_by_ideal(
    gamma: &RankedPoset,
    ideal: &[usize],
    join: impl Fn(usize) -> usize,
    lower_eulerian: bool,
) -> Result<PosetMap, CylinderError> {
    let inside: HashSet<usize> = ideal.iter().copied().collect();
    let lower: Vec<usize> = gamma.poset.elements().filter(|z| !inside.contains(z)).collect();
    let mut pos = vec![usize::MAX; gamma.len()];
    for (k, &y) in ideal.iter().enumerate() {
        pos[y] = k;
    }
    let source = gamma.induced(&lower);
    let target = gamma.induced(ideal).shifted(-1);
    let image = lower.iter().map(|&z| pos[join(z)]).collect();
    let m = PosetMap::new(source, target, image)?;
    let check = if lower_eulerian {
        subdivision::sfs_violation(&m, SfsMethod::Eq31)
    } else {
        sfs_violation_locally(&m)
    };
    match check {
        Ok(None) => Ok(m),
        Ok(Some(v)) => Err(CylinderError::Postcondition(m.describe(&v))),
        Err(e) => Err(CylinderError::Postcondition(e.to_string())),
    }
}

/// Source labels get `X:`, target labels `Y:`.
pub fn tag_map(m: &PosetMap) -> PosetMap {
    retag_map(m, "X:", "Y:")
}

fn retag_map(m: &PosetMap, src: &str, tgt: &str) -> PosetMap {
    let source = m.source.relabeled(|l| format!("{src}{l}")).unwrap();
    let target = m.target.relabeled(|l| format!("{tgt}{l}")).unwrap();
    PosetMap::new(source, target, m.image().to_vec()).unwrap()
}

/// Relabels every element of `Γ` by whether it lies above `q`.
pub fn tag_triple(t: &JoinTriple) -> JoinTriple {
    let g = &t.gamma.poset;
    let labels: Vec<String> = g
        .elements()
        .map(|z| {
            let side = if g.le(t.q, z) { "Y" } else { "X" };
            format!("{side}:{}", g.label(z))
        })
        .collect();
    let gamma = t.gamma.relabeled(|l| labels[g.index_of(l).unwrap()].clone()).unwrap();
    JoinTriple { gamma, q: t.q }
}

/// `MAP(CYL(σ))` equals `σ` with tagged labels.
pub fn roundtrip_cyl_map(m: &PosetMap) -> Result<bool, CylinderError> {
    Ok(map(&cyl(m)?)? == tag_map(m))
}

/// `CYL(MAP(t))` equals `t` with its elements tagged by side.
pub fn roundtrip_map_cyl(t: &JoinTriple) -> Result<bool, CylinderError> {
    Ok(cyl(&map(t)?)? == tag_triple(t))
}

/// A commutative square of strong formal subdivisions
///
/// ```text
/// X  --σ-->  Y
/// |φ1        |φ2
/// X' --σ'--> Y'
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SfsSquare {
    pub phi1: PosetMap,
    pub sigma: PosetMap,
    pub sigma_prime: PosetMap,
    pub phi2: PosetMap,
}

impl SfsSquare {
    /// Checks endpoints, commutativity and that all four maps are strong
    /// formal subdivisions.
    pub fn new(phi1: PosetMap, sigma: PosetMap, sigma_prime: PosetMap, phi2: PosetMap) -> Result<Self, CylinderError> {
        let sq = SfsSquare {
            phi1,
            sigma,
            sigma_prime,
            phi2,
        };
        sq.validate()?;
        Ok(sq)
    }

    pub fn validate(&self) -> Result<(), CylinderError> {
        if self.phi1.source != self.sigma.source
            || self.phi1.target != self.sigma_prime.source
            || self.sigma.target != self.phi2.source
            || self.phi2.target != self.sigma_prime.target
        {
            return Err(CylinderError::EndpointMismatch);
        }
        let down = subdivision::compose(&self.sigma, &self.phi2)?;
        let across = subdivision::compose(&self.phi1, &self.sigma_prime)?;
        for x in down.source.poset.elements() {
            if down.image_label(x) != across.image_label(x) {
                return Err(CylinderError::NotCommutative(down.source.poset.label(x).to_string()));
            }
        }
        for m in [&self.phi1, &self.sigma, &self.sigma_prime, &self.phi2] {
            require_sfs(m)?;
        }
        Ok(())
    }

    /// Reflection through the diagonal: `σ ↔ φ1`, `σ' ↔ φ2`.
    pub fn involution(&self) -> SfsSquare {
        SfsSquare {
            phi1: self.sigma.clone(),
            sigma: self.phi1.clone(),
            sigma_prime: self.phi2.clone(),
            phi2: self.sigma_prime.clone(),
        }
    }

    /// Labels tagged as they appear inside `Cyl(σ)` and `Cyl(σ')`.
    pub fn tagged(&self) -> SfsSquare {
        SfsSquare {
            phi1: retag_map(&self.phi1, "X:", "X:"),
            sigma: retag_map(&self.sigma, "X:", "Y:"),
            sigma_prime: retag_map(&self.sigma_prime, "X:", "Y:"),
            phi2: retag_map(&self.phi2, "Y:", "Y:"),
        }
    }
}

/// `φ: Cyl(σ) → Cyl(σ')`, `φ1` on `X` and `φ2` on `Y`.
pub fn cyl_square(sq: &SfsSquare) -> Result<PosetMap, CylinderError> {
    sq.validate()?;
    let t = cyl(&sq.sigma)?;
    let t2 = cyl(&sq.sigma_prime)?;
    let nx = sq.sigma.source.len();
    let nx2 = sq.sigma_prime.source.len();
    let x2_map = sq.phi1.target.poset.label_map_into(&sq.sigma_prime.source.poset).unwrap();
    let y2_map = sq.phi2.target.poset.label_map_into(&sq.sigma_prime.target.poset).unwrap();
    let image = (0..t.gamma.len())
        .map(|z| {
            if z < nx {
                x2_map[sq.phi1.apply(z)]
            } else {
                nx2 + y2_map[sq.phi2.apply(z - nx)]
            }
        })
        .collect();
    let phi = PosetMap::new(t.gamma.clone(), t2.gamma.clone(), image)?;
    require_sfs(&phi).map_err(|e| CylinderError::Postcondition(e.to_string()))?;
    check_morphism(&phi, &t, &t2).map_err(|e| CylinderError::Postcondition(e.to_string()))?;
    Ok(phi)
}

/// `φ(q) = q'` and `φ(z ∨ q) = φ(z) ∨ q'` for every `z`.
pub fn check_morphism(phi: &PosetMap, t: &JoinTriple, t2: &JoinTriple) -> Result<(), CylinderError> {
    if phi.source != t.gamma || phi.target != t2.gamma {
        return Err(CylinderError::EndpointMismatch);
    }
    let to_src = t.gamma.poset.label_map_into(&phi.source.poset).unwrap();
    let from_tgt = phi.target.poset.label_map_into(&t2.gamma.poset).unwrap();
    let apply = |z: usize| from_tgt[phi.apply(to_src[z])];
    let (g, g2) = (&t.gamma.poset, &t2.gamma.poset);
    if apply(t.q) != t2.q {
        return Err(CylinderError::NotMorphism(format!(
            "φ({}) = {} instead of {}",
            t.q_label(),
            g2.label(apply(t.q)),
            t2.q_label()
        )));
    }
    for z in g.elements() {
        let lhs = g.join(z, t.q).map(&apply);
        let rhs = g2.join(apply(z), t2.q);
        if lhs.is_none() || lhs != rhs {
            return Err(CylinderError::NotMorphism(format!("join condition fails at {}", g.label(z))));
        }
    }
    Ok(())
}

pub fn is_morphism(phi: &PosetMap, t: &JoinTriple, t2: &JoinTriple) -> bool {
    check_morphism(phi, t, t2).is_ok()
}

/// Restricts a morphism of triples to the four sides of a square.
pub fn map_square(phi: &PosetMap, t: &JoinTriple, t2: &JoinTriple) -> Result<SfsSquare, CylinderError> {
    require_sfs(phi)?;
    check_morphism(phi, t, t2)?;
    let sigma = map(t)?;
    let sigma_prime = map(t2)?;
    let (g, g2) = (&phi.source.poset, &phi.target.poset);
    let q = g.element(t.q_label())?;
    let q2 = g2.element(t2.q_label())?;
    for z in g.elements() {
        if g2.le(q2, phi.apply(z)) != g.le(q, z) {
            return Err(CylinderError::NotMorphism(format!(
                "preimage of the upper set of q' differs from the upper set of q at {}",
                g.label(z)
            )));
        }
    }
    let side = |from: &RankedPoset, to: &RankedPoset| -> Result<PosetMap, CylinderError> {
        let image = from
            .poset
            .labels()
            .iter()
            .map(|l| {
                let y = phi.apply(g.index_of(l).unwrap());
                to.poset.index_of(g2.label(y)).unwrap()
            })
            .collect();
        Ok(PosetMap::new(from.clone(), to.clone(), image)?)
    };
    let phi1 = side(&sigma.source, &sigma_prime.source)?;
    let phi2 = side(&sigma.target, &sigma_prime.target)?;
    SfsSquare::new(phi1, sigma, sigma_prime, phi2)
}

/// `Cyl` of the cylinder map of a square, i.e. the four-way cylinder on
/// `X ⊔ Y ⊔ X' ⊔ Y'`.
pub fn square_cylinder(sq: &SfsSquare) -> Result<RankedPoset, CylinderError> {
    mapping_cylinder(&cyl_square(sq)?)
}

/// Retags `Cyl(cyl_square(ι(sq)))` so that it is comparable with
/// `Cyl(cyl_square(sq))`: the blocks `X:Y:` and `Y:X:` trade places.
pub fn swap_middle_blocks(p: &RankedPoset) -> RankedPoset {
    p.relabeled(|l| {
        if let Some(rest) = l.strip_prefix("X:Y:") {
            format!("Y:X:{rest}")
        } else if let Some(rest) = l.strip_prefix("Y:X:") {
            format!("X:Y:{rest}")
        } else {
            l.to_string()
        }
    })
    .unwrap()
}

/// Whether `Cyl(φ) = Cyl(ι(φ))` for the cylinder map `φ` of `sq`.
pub fn involution_preserves_cylinder(sq: &SfsSquare) -> Result<bool, CylinderError> {
    let a = square_cylinder(sq)?;
    let b = square_cylinder(&sq.involution())?;
    Ok(a == swap_middle_blocks(&b))
}

/// Eq31 check under the weaker hypothesis that both sides are only locally
/// Eulerian.
pub fn sfs_violation_locally(m: &PosetMap) -> Result<Option<subdivision::SfsViolation>, SfsError> {
    if !m.source.is_locally_eulerian() {
        return Err(SfsError::SourceNotLowerEulerian);
    }
    if !m.target.is_locally_eulerian() {
        return Err(SfsError::TargetNotLowerEulerian);
    }
    let lift = m.strong_surjectivity_witness()?;
    Ok(subdivision::eq31_violation(m).or(lift.map(|(x, y)| subdivision::SfsViolation::NoLift { x, y })))
}

/// `(Cyl(σ), ρ, Y)` for a strong formal subdivision between locally
/// Eulerian posets. Returns the cylinder and the indices of `Y`.
pub fn cyl_ideal(m: &PosetMap) -> Result<(RankedPoset, Vec<usize>), CylinderError> {
    match sfs_violation_locally(m) {
        Ok(None) => {}
        Ok(Some(v)) => return Err(CylinderError::NotSfs(m.describe(&v))),
        Err(e) => return Err(CylinderError::NotSfs(e.to_string())),
    }
    let gamma = mapping_cylinder(m)?;
    let nx = m.source.len();
    let ideal: Vec<usize> = (nx..gamma.len()).collect();
    check_ideal(&gamma, &ideal).map_err(|e| CylinderError::Postcondition(e.to_string()))?;
    Ok((gamma, ideal))
}

fn check_ideal(gamma: &RankedPoset, ideal: &[usize]) -> Result<(), CylinderError> {
    if !gamma.is_locally_eulerian() {
        return Err(CylinderError::NotLocallyEulerian);
    }
    let ok = gamma.poset.is_join_admissible_ideal(ideal).unwrap_or(false);
    let mins = gamma.poset.minimal_elements();
    if !ok || ideal.iter().any(|z| mins.contains(z)) {
        return Err(CylinderError::BadIdeal);
    }
    Ok(())
}

/// `MAP(Γ, ρ, I): Γ ∖ I → I`, `x ↦ x ∨ I`.
pub fn map_ideal(gamma: &RankedPoset, ideal: &[usize]) -> Result<PosetMap, CylinderError> {
    check_ideal(gamma, ideal)?;
    let mut ideal = ideal.to_vec();
    ideal.sort_unstable();
    ideal.dedup();
    let g = &gamma.poset;
    split_by_ideal(gamma, &ideal, |z| g.join_with_ideal(z, &ideal).unwrap(), false)
}
