//! Maps between ranked posets and strong formal subdivisions.
//!
//! A strong formal subdivision can be recognised three ways: by the
//! alternating sum over fibres ([`SfsMethod::Eq31`]), by the cumulative sum
//! over lower sets ([`SfsMethod::Eq32`]), or by asking every preimage of a
//! lower interval to be near-Eulerian with the expected boundary
//! ([`SfsMethod::NearEulerian`]). All three are implemented independently so
//! they can be cross-checked.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::constructions;
use crate::poset::{self, Poset, PosetError, RankFunction, RankedPoset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SfsError {
    #[error("source is not lower Eulerian")]
    SourceNotLowerEulerian,
    #[error("target is not lower Eulerian")]
    TargetNotLowerEulerian,
    #[error("map is not order-preserving: `{0}` <= `{1}` but their images are not comparable that way")]
    NotOrderPreserving(String, String),
    #[error("map is not rank-increasing at `{0}`")]
    NotRankIncreasing(String),
    #[error("map is not strongly surjective: {0}")]
    NotStronglySurjective(String),
    #[error("map is not a strong formal subdivision: {0}")]
    NotSfs(String),
    #[error("maps are not composable: target of the first differs from source of the second")]
    NotComposable,
    #[error("image has {got} entries but the source has {expected} elements")]
    ImageLength { expected: usize, got: usize },
    #[error("image entry {0} is out of range")]
    ImageOutOfRange(usize),
    #[error("not a nonempty lower order ideal of the target")]
    NotLowerIdeal,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A function between two ranked posets, stored as an index table.
#[derive(Clone)]
pub struct PosetMap {
    pub source: RankedPoset,
    pub target: RankedPoset,
    image: Vec<usize>,
}

impl fmt::Debug for PosetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self
            .source
            .poset
            .elements()
            .map(|x| format!("{}->{}", self.source.poset.label(x), self.target.poset.label(self.image[x])))
            .collect();
        f.debug_struct("PosetMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("image", &pairs)
            .finish()
    }
}

/// Equal when the endpoints are equal and equally-labelled source elements
/// have equally-labelled images.
impl PartialEq for PosetMap {
    fn eq(&self, other: &Self) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let map = self.source.poset.label_map_into(&other.source.poset).unwrap();
        self.source
            .poset
            .elements()
            .all(|x| self.image_label(x) == other.image_label(map[x]))
    }
}

impl Eq for PosetMap {}

impl PosetMap {
    pub fn new(source: RankedPoset, target: RankedPoset, image: Vec<usize>) -> Result<Self, SfsError> {
        if image.len() != source.len() {
            return Err(SfsError::ImageLength {
                expected: source.len(),
                got: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= target.len()) {
            return Err(SfsError::ImageOutOfRange(bad));
        }
        source.rank.validate(&source.poset)?;
        target.rank.validate(&target.poset)?;
        Ok(PosetMap { source, target, image })
    }

    /// Builds the image table from `(source label, target label)` pairs.
    pub fn from_label_pairs<S: AsRef<str>>(
        source: RankedPoset,
        target: RankedPoset,
        pairs: &[(S, S)],
    ) -> Result<Self, SfsError> {
        let mut image = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let x = source.poset.element(a.as_ref())?;
            let y = target.poset.element(b.as_ref())?;
            image[x] = y;
        }
        if let Some(x) = image.iter().position(|&y| y == usize::MAX) {
            return Err(SfsError::Poset(PosetError::Precondition(format!(
                "no image given for `{}`",
                source.poset.label(x)
            ))));
        }
        PosetMap::new(source, target, image)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn image_label(&self, x: usize) -> &str {
        self.target.poset.label(self.image[x])
    }

    /// `(source label, target label)` for every source element, in index order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.source
            .poset
            .elements()
            .map(|x| (self.source.poset.label(x).to_string(), self.image_label(x).to_string()))
            .collect()
    }

    /// Elements of the source mapping to `y`.
    pub fn fibre(&self, y: usize) -> Vec<usize> {
        self.source.poset.elements().filter(|&x| self.image[x] == y).collect()
    }

    fn order_violation(&self) -> Option<(usize, usize)> {
        let (x, y) = (&self.source.poset, &self.target.poset);
        for &(a, b) in x.covers() {
            if !y.le(self.image[a], self.image[b]) {
                return Some((a, b));
            }
        }
        None
    }

    pub fn is_order_preserving(&self) -> bool {
        self.order_violation().is_none()
    }

    pub fn is_rank_increasing(&self) -> bool {
        self.source
            .poset
            .elements()
            .all(|x| self.source.rank_of(x) <= self.target.rank_of(self.image[x]))
    }

    pub fn is_surjective(&self) -> bool {
        let hit: HashSet<usize> = self.image.iter().copied().collect();
        hit.len() == self.target.len()
    }

    fn require_order_and_rank(&self) -> Result<(), SfsError> {
        if let Some((a, b)) = self.order_violation() {
            return Err(SfsError::NotOrderPreserving(
                self.source.poset.label(a).into(),
                self.source.poset.label(b).into(),
            ));
        }
        if let Some(x) = self
            .source
            .poset
            .elements()
            .find(|&x| self.source.rank_of(x) > self.target.rank_of(self.image[x]))
        {
            return Err(SfsError::NotRankIncreasing(self.source.poset.label(x).into()));
        }
        Ok(())
    }

    /// First failure of strong surjectivity: `(None, y)` when `y` is not hit,
    /// `(Some(x), y)` when `σ(x) <= y` has no lift of the right rank.
    pub fn strong_surjectivity_witness(&self) -> Result<Option<(Option<usize>, usize)>, SfsError> {
        self.require_order_and_rank()?;
        let (xp, yp) = (&self.source.poset, &self.target.poset);
        let mut hit = vec![false; yp.len()];
        for &y in &self.image {
            hit[y] = true;
        }
        if let Some(y) = hit.iter().position(|h| !h) {
            return Ok(Some((None, y)));
        }
        for x in xp.elements() {
            // Targets reachable from x by a lift of matching rank.
            let mut lifted = vec![false; yp.len()];
            for x2 in std::iter::once(x).chain(xp.strictly_above(x)) {
                let y = self.image[x2];
                if self.source.rank_of(x2) == self.target.rank_of(y) {
                    lifted[y] = true;
                }
            }
            let sx = self.image[x];
            for y in std::iter::once(sx).chain(yp.strictly_above(sx)) {
                if !lifted[y] {
                    return Ok(Some((Some(x), y)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_strongly_surjective(&self) -> Result<bool, SfsError> {
        Ok(self.strong_surjectivity_witness()?.is_none())
    }

    /// `ρ_Y(0̂_Y) − ρ_X(0̂_X)`.
    pub fn sfs_rank(&self) -> Result<i64, SfsError> {
        let bx = self.source.poset.bottom().ok_or(PosetError::NoUniqueMinimum)?;
        let by = self.target.poset.bottom().ok_or(PosetError::NoUniqueMinimum)?;
        Ok(self.target.rank_of(by) - self.source.rank_of(bx))
    }

    /// Checks the standing hypotheses of a strong formal subdivision and
    /// names the first one that fails.
    pub fn check_candidate(&self) -> Result<(), SfsError> {
        if !self.source.is_lower_eulerian() {
            return Err(SfsError::SourceNotLowerEulerian);
        }
        if !self.target.is_lower_eulerian() {
            return Err(SfsError::TargetNotLowerEulerian);
        }
        self.check_candidate_locally()
    }

    /// Like [`check_candidate`](Self::check_candidate) but only asks the
    /// endpoints to be locally Eulerian.
    pub fn check_candidate_locally(&self) -> Result<(), SfsError> {
        if !self.source.is_locally_eulerian() {
            return Err(SfsError::SourceNotLowerEulerian);
        }
        if !self.target.is_locally_eulerian() {
            return Err(SfsError::TargetNotLowerEulerian);
        }
        match self.strong_surjectivity_witness()? {
            None => Ok(()),
            Some((None, y)) => Err(SfsError::NotStronglySurjective(format!(
                "`{}` is not in the image",
                self.target.poset.label(y)
            ))),
            Some((Some(x), y)) => Err(SfsError::NotStronglySurjective(format!(
                "no lift of `{}` above `{}`",
                self.target.poset.label(y),
                self.source.poset.label(x)
            ))),
        }
    }

    pub fn describe(&self, v: &SfsViolation) -> String {
        let xl = |x: usize| self.source.poset.label(x).to_string();
        let yl = |y: usize| self.target.poset.label(y).to_string();
        match v {
            SfsViolation::Eq31 { x, y, sum } => format!("x={}, y={}, sum={}", xl(*x), yl(*y), sum),
            SfsViolation::Eq32 { x, y, sum, expected } => {
                format!("x={}, y={}, sum={}, expected={}", xl(*x), yl(*y), sum, expected)
            }
            SfsViolation::NearEulerian { y, failure } => format!("y={}: {}", yl(*y), failure),
            SfsViolation::NoLift { x: None, y } => format!("y={} is not in the image", yl(*y)),
            SfsViolation::NoLift { x: Some(x), y } => {
                format!("x={}, y={}: no x' >= x of rank {} maps to y", xl(*x), yl(*y), self.target.rank_of(*y))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SfsMethod {
    Eq31,
    Eq32,
    NearEulerian,
}

impl SfsMethod {
    pub const ALL: [SfsMethod; 3] = [SfsMethod::Eq31, SfsMethod::Eq32, SfsMethod::NearEulerian];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NearEulerianFailure {
    NotLowerEulerian,
    WrongRank { expected: i64, got: i64 },
    NotBoundaryOfEulerian,
    NotNearEulerian,
    WrongBoundary,
}

impl fmt::Display for NearEulerianFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NearEulerianFailure::NotLowerEulerian => write!(f, "preimage is not lower Eulerian"),
            NearEulerianFailure::WrongRank { expected, got } => {
                write!(f, "preimage has rank {got}, expected {expected}")
            }
            NearEulerianFailure::NotBoundaryOfEulerian => {
                write!(f, "preimage of the bottom is not the boundary of an Eulerian poset")
            }
            NearEulerianFailure::NotNearEulerian => write!(f, "preimage is not near-Eulerian"),
            NearEulerianFailure::WrongBoundary => {
                write!(f, "boundary of the preimage differs from the preimage of the open interval")
            }
        }
    }
}

/// The first instance at which a characterization fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SfsViolation {
    Eq31 { x: usize, y: usize, sum: i64 },
    Eq32 { x: usize, y: usize, sum: i64, expected: i64 },
    NearEulerian { y: usize, failure: NearEulerianFailure },
    /// Strong surjectivity fails at `y` (above `σ(x)` when `x` is given).
    NoLift { x: Option<usize>, y: usize },
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Checks that both sides are lower Eulerian and the map is order-preserving
/// and rank-increasing, then returns the first violation of the chosen
/// characterization. When the characterization holds, strong surjectivity
/// is checked last.
pub fn sfs_violation(m: &PosetMap, method: SfsMethod) -> Result<Option<SfsViolation>, SfsError> {
    if !m.source.is_lower_eulerian() {
        return Err(SfsError::SourceNotLowerEulerian);
    }
    if !m.target.is_lower_eulerian() {
        return Err(SfsError::TargetNotLowerEulerian);
    }
    let lift = m.strong_surjectivity_witness()?;
    let v = match method {
        SfsMethod::Eq31 => eq31_violation(m),
        SfsMethod::Eq32 => eq32_violation(m),
        SfsMethod::NearEulerian => near_eulerian_violation(m),
    };
    Ok(v.or(lift.map(|(x, y)| SfsViolation::NoLift { x, y })))
}

pub fn is_sfs(m: &PosetMap, method: SfsMethod) -> Result<bool, SfsError> {
    Ok(sfs_violation(m, method)?.is_none())
}

/// Alternating fibre sums over `x' >= x`, checked against 1 for every
/// `y >= σ(x)`. Targets hit from `x` are checked before empty fibres.
pub(crate) fn eq31_violation(m: &PosetMap) -> Option<SfsViolation> {
    let (xp, yp) = (&m.source.poset, &m.target.poset);
    let mut acc = vec![0i64; yp.len()];
    for x in xp.elements() {
        acc.iter_mut().for_each(|a| *a = 0);
        let mut hit = Vec::new();
        for x2 in std::iter::once(x).chain(xp.strictly_above(x)) {
            let y = m.apply(x2);
            if !hit.contains(&y) {
                hit.push(y);
            }
            acc[y] += sign(m.target.rank_of(y) - m.source.rank_of(x2));
        }
        let sx = m.apply(x);
        let rest = std::iter::once(sx).chain(yp.strictly_above(sx)).filter(|y| !hit.contains(y));
        for y in hit.clone().into_iter().chain(rest) {
            if acc[y] != 1 {
                return Some(SfsViolation::Eq31 { x, y, sum: acc[y] });
            }
        }
    }
    None
}

pub(crate) fn eq32_violation(m: &PosetMap) -> Option<SfsViolation> {
    let (xp, yp) = (&m.source.poset, &m.target.poset);
    let mut fibre = vec![0i64; yp.len()];
    for x in xp.elements() {
        fibre.iter_mut().for_each(|a| *a = 0);
        for x2 in std::iter::once(x).chain(xp.strictly_above(x)) {
            fibre[m.apply(x2)] += sign(m.source.rank_of(x2));
        }
        let sx = m.apply(x);
        for y in std::iter::once(sx).chain(yp.strictly_above(sx)) {
            let below: i64 = std::iter::once(y).chain(yp.strictly_below(y)).map(|y2| fibre[y2]).sum();
            let sum = sign(m.target.rank_of(y)) * below;
            let expected = i64::from(sx == y);
            if sum != expected {
                return Some(SfsViolation::Eq32 { x, y, sum, expected });
            }
        }
    }
    None
}

pub(crate) fn near_eulerian_violation(m: &PosetMap) -> Option<SfsViolation> {
    let (xp, yp) = (&m.source.poset, &m.target.poset);
    let bx = xp.bottom()?;
    let by = yp.bottom()?;
    for y in yp.elements() {
        let fail = |failure| Some(SfsViolation::NearEulerian { y, failure });
        let closed: Vec<usize> = xp.elements().filter(|&x| yp.le(m.apply(x), y)).collect();
        if closed.is_empty() {
            return fail(NearEulerianFailure::NotLowerEulerian);
        }
        let sub = m.source.induced(&closed);
        if !sub.is_lower_eulerian() {
            return fail(NearEulerianFailure::NotLowerEulerian);
        }
        let expected = m.target.rank_of(y) - m.source.rank_of(bx);
        let got = sub.rank_length() as i64;
        if got != expected {
            return fail(NearEulerianFailure::WrongRank { expected, got });
        }
        if y == by {
            let ok = sub.adjoin_max().map(|b| b.is_eulerian_positive_rank()).unwrap_or(false);
            if !ok {
                return fail(NearEulerianFailure::NotBoundaryOfEulerian);
            }
        } else {
            if !sub.is_near_eulerian() {
                return fail(NearEulerianFailure::NotNearEulerian);
            }
            let boundary: HashSet<&str> = poset::near_eulerian_boundary(&sub.poset)
                .into_iter()
                .map(|i| sub.poset.label(i))
                .collect();
            let open: HashSet<&str> = closed
                .iter()
                .filter(|&&x| m.apply(x) != y)
                .map(|&x| xp.label(x))
                .collect();
            if boundary != open {
                return fail(NearEulerianFailure::WrongBoundary);
            }
        }
    }
    None
}

/// `τ ∘ σ`. The target of `sigma` must equal the source of `tau`, rank
/// functions included.
pub fn compose(sigma: &PosetMap, tau: &PosetMap) -> Result<PosetMap, SfsError> {
    if sigma.target != tau.source {
        return Err(SfsError::NotComposable);
    }
    let map = sigma.target.poset.label_map_into(&tau.source.poset).unwrap();
    let image = sigma.image.iter().map(|&y| tau.image[map[y]]).collect();
    PosetMap::new(sigma.source.clone(), tau.target.clone(), image)
}

/// `σ⁻¹(I) → I` for a nonempty lower order ideal `I` of the target.
pub fn restrict_to_ideal(m: &PosetMap, ideal: &[usize]) -> Result<PosetMap, SfsError> {
    if ideal.is_empty() || !m.target.poset.is_lower_ideal(ideal) {
        return Err(SfsError::NotLowerIdeal);
    }
    let mut ideal = ideal.to_vec();
    ideal.sort_unstable();
    ideal.dedup();
    let src: Vec<usize> = m.source.poset.elements().filter(|&x| ideal.contains(&m.apply(x))).collect();
    restricted(m, &src, &ideal)
}

/// `X_{>=x} → Y_{>=σ(x)}`.
pub fn restrict_above(m: &PosetMap, x: usize) -> Result<PosetMap, SfsError> {
    let src = m.source.poset.up_set(x);
    let tgt = m.target.poset.up_set(m.apply(x));
    restricted(m, &src, &tgt)
}

fn restricted(m: &PosetMap, src: &[usize], tgt: &[usize]) -> Result<PosetMap, SfsError> {
    let mut pos = vec![usize::MAX; m.target.len()];
    for (k, &y) in tgt.iter().enumerate() {
        pos[y] = k;
    }
    let image = src.iter().map(|&x| pos[m.apply(x)]).collect();
    PosetMap::new(m.source.induced(src), m.target.induced(tgt), image)
}

/// `(Σ_X (−1)^ρ, Σ_Y (−1)^ρ)`.
pub fn parity_check(m: &PosetMap) -> (i64, i64) {
    (
        poset::even_odd_balance(&m.source.poset, &m.source.rank),
        poset::even_odd_balance(&m.target.poset, &m.target.rank),
    )
}

/// Every maximal chain `y_0 < … < y_s` of the target is the image of a
/// maximal chain `x_0 < … < x_r` of the source with
/// `r − s = ρ_Y(y_0) − ρ_X(x_0)`. Exhaustive; small posets only.
pub fn lifts_maximal_chains(m: &PosetMap) -> bool {
    let mut realised: HashSet<Vec<usize>> = HashSet::new();
    for chain in m.source.poset.maximal_chains() {
        let mut img: Vec<usize> = chain.iter().map(|&x| m.apply(x)).collect();
        img.dedup();
        let r = chain.len() as i64 - 1;
        let s = img.len() as i64 - 1;
        if r - s == m.target.rank_of(img[0]) - m.source.rank_of(chain[0]) {
            realised.insert(img);
        }
    }
    m.target.poset.maximal_chains().into_iter().all(|c| realised.contains(&c))
}

pub fn identity_sfs(b: &RankedPoset) -> PosetMap {
    PosetMap::new(b.clone(), b.clone(), b.poset.elements().collect()).unwrap()
}

/// The unique map `∂B → B_0` for an Eulerian `B` of positive rank, with
/// `ρ_{B_0}(0̂) = ρ_B(1̂) − 1`.
pub fn to_b0(b: &RankedPoset) -> Result<PosetMap, SfsError> {
    let source = b.boundary()?;
    collapse_to_b0(&source)
}

/// The unique map `X → B_0` with `ρ_{B_0}(0̂)` one less than the rank of the
/// top of `X̄`. A strong formal subdivision exactly when `X̄` is Eulerian.
pub fn collapse_to_b0(x: &RankedPoset) -> Result<PosetMap, SfsError> {
    let closed = x.adjoin_max()?;
    let top = closed.poset.top().unwrap();
    let b0 = constructions::boolean_algebra(0);
    let target = RankedPoset::new(b0.poset, RankFunction::new(vec![closed.rank_of(top) - 1]))?;
    PosetMap::new(x.clone(), target, vec![0; x.len()])
}

/// `B → B_1` sending `∂B` to `0̂` and everything else to `1̂`, for
/// near-Eulerian `B`.
pub fn to_b1(b: &RankedPoset) -> Result<PosetMap, SfsError> {
    if !b.is_near_eulerian() {
        return Err(PosetError::NotNearEulerian.into());
    }
    let bottom = b.poset.bottom().unwrap();
    let top_rank = b.rank_of(bottom) + b.rank_length() as i64;
    let b1 = constructions::boolean_algebra(1);
    let target = RankedPoset::new(b1.poset, RankFunction::new(vec![top_rank - 1, top_rank]))?;
    let boundary: HashSet<usize> = poset::near_eulerian_boundary(&b.poset).into_iter().collect();
    let image = b.poset.elements().map(|z| usize::from(!boundary.contains(&z))).collect();
    PosetMap::new(b.clone(), target, image)
}

/// `Pyr(∂B) → B` with `(z, 0̂) ↦ z` and `(z, 1̂) ↦ 1̂_B`.
pub fn bipyramid_sfs(b: &RankedPoset) -> Result<PosetMap, SfsError> {
    let bd = b.boundary()?;
    let source = constructions::pyramid(&bd);
    let top = b.poset.top().unwrap();
    let map = bd.poset.label_map_into(&b.poset).unwrap();
    // Product index i * 2 + j, where j = 1 is the top of B_1.
    let image = (0..source.len())
        .map(|k| if k % 2 == 0 { map[k / 2] } else { top })
        .collect();
    PosetMap::new(source, b.clone(), image)
}

/// `σ × σ'`.
pub fn product_sfs(a: &PosetMap, b: &PosetMap) -> Result<PosetMap, SfsError> {
    let source = constructions::direct_product(&a.source, &b.source);
    let target = constructions::direct_product(&a.target, &b.target);
    let (m, mt) = (b.source.len(), b.target.len());
    let image = (0..source.len())
        .map(|k| a.apply(k / m) * mt + b.apply(k % m))
        .collect();
    PosetMap::new(source, target, image)
}

/// `B ∗ X → Y`: `∂B` goes to `0̂_Y`, `X ∖ 0̂_X` maps by `σ`. The target is
/// shifted by the same amount as the right factor of the star product.
pub fn star_lift(b: &RankedPoset, sigma: &PosetMap) -> Result<PosetMap, SfsError> {
    let source = constructions::star_product(b, &sigma.source)?;
    let bx = sigma.source.poset.bottom().ok_or(PosetError::NoUniqueMinimum)?;
    let by = sigma.target.poset.bottom().ok_or(PosetError::NoUniqueMinimum)?;
    let top_b = b.rank_of(b.poset.top().unwrap());
    let shift = top_b - sigma.source.rank_of(bx) - 1;
    let target = sigma.target.shifted(shift);
    let image = source
        .poset
        .labels()
        .iter()
        .map(|l| {
            if l.starts_with("L:") {
                by
            } else {
                let x = sigma.source.poset.index_of(&l[2..]).unwrap();
                sigma.apply(x)
            }
        })
        .collect();
    Ok(PosetMap::new(source, target, image)?)
}

/// `∂B × X → B ⋄* Y`: `(z, x) ↦ (z, σ(x))`, or the top when `σ(x) = 1̂_Y`.
/// Needs `Y` Eulerian of positive rank.
pub fn dual_diamond_lift(b: &RankedPoset, sigma: &PosetMap) -> Result<PosetMap, SfsError> {
    let bd = b.boundary()?;
    let source = constructions::direct_product(&bd, &sigma.source);
    let target = constructions::dual_diamond_product(b, &sigma.target)?;
    let ytop = sigma.target.poset.top().ok_or(PosetError::NoUniqueMaximum)?;
    let ttop = target.poset.top().unwrap();
    let m = sigma.source.len();
    let image = (0..source.len())
        .map(|k| {
            let (z, x) = (k / m, k % m);
            let y = sigma.apply(x);
            if y == ytop {
                ttop
            } else {
                let l = format!("({},{})", bd.poset.label(z), sigma.target.poset.label(y));
                target.poset.index_of(&l).unwrap()
            }
        })
        .collect();
    PosetMap::new(source, target, image)
}

/// Convenience: the map given by a closure on indices.
pub fn map_from_fn(source: &RankedPoset, target: &RankedPoset, f: impl Fn(usize) -> usize) -> Result<PosetMap, SfsError> {
    PosetMap::new(source.clone(), target.clone(), source.poset.elements().map(f).collect())
}

/// The strongly surjective non-example `∂B_3 → ∂Σ̃B_2` with
/// `c ↦ b` and `ac, bc ↦ ẑ`.
pub fn boundary_nonexample() -> PosetMap {
    let x_labels = ["", "a", "b", "c", "ab", "ac", "bc"];
    let empty_as_braces = |l: &str| if l.is_empty() { "{}".to_string() } else { l.to_string() };
    let x = RankedPoset::natural(
        Poset::from_strict_order(x_labels.iter().map(|s| s.to_string()).collect(), |i, j| {
            let (a, b) = (x_labels[i], x_labels[j]);
            a.len() < b.len() && a.chars().all(|ch| b.contains(ch))
        })
        .unwrap(),
    )
    .unwrap()
    .relabeled(empty_as_braces)
    .unwrap();
    let y_labels = ["{}", "a", "b", "ab", "zhat"];
    let y = RankedPoset::natural(
        Poset::from_covers(
            &y_labels,
            &[("{}", "a"), ("{}", "b"), ("a", "ab"), ("b", "ab"), ("a", "zhat"), ("b", "zhat")],
        )
        .unwrap(),
    )
    .unwrap();
    PosetMap::from_label_pairs(
        x,
        y,
        &[
            ("{}", "{}"),
            ("a", "a"),
            ("b", "b"),
            ("ab", "ab"),
            ("c", "b"),
            ("ac", "zhat"),
            ("bc", "zhat"),
        ],
    )
    .unwrap()
}
