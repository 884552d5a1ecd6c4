//! Numerical invariants of the bidouble cover defined by the Inoue branch
//! divisors, and of its minimal model.
//!
//! A smooth bidouble cover (Galois group `(ℤ/2)²`) of `Y` is determined by
//! three branch classes `D₁, D₂, D₃` and three character classes
//! `𝓛₁, 𝓛₂, 𝓛₃` satisfying `Dⱼ + Dₖ ≡ 2𝓛ᵢ` for every permutation
//! `{i,j,k} = {1,2,3}`. The standard abelian-cover formulas give, for the
//! cover `S̃`:
//!
//! * `χ(O_S̃) = 4χ(O_Y) + ½ Σ 𝓛ᵢ·(𝓛ᵢ + K_Y)`
//! * `K_S̃² = (2K_Y + ΣDᵢ)²`
//! * `p_g(S̃) = p_g(Y) + Σ h⁰(K_Y + 𝓛ᵢ)`
//!
//! and the bicanonical system of `S̃` decomposes into four character parts
//! computed on `Y` as `h⁰(M)` and `h⁰(M − 𝓛ᵢ)` with `M = 2K_Y + ΣDᵢ`.
//! Every Inoue-specific output of these formulas is pinned by tests against
//! the known values of the construction.

use thiserror::Error;

use crate::linear_systems::h0;
use crate::picard::DivisorClass;
use crate::quadrilateral::{NamedClassTable, PointConfiguration};

/// Branch divisors and character classes of a bidouble cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchData {
    /// Branch divisor classes `D₁, D₂, D₃`.
    pub d: [DivisorClass; 3],
    /// Character classes `𝓛₁, 𝓛₂, 𝓛₃`.
    pub l: [DivisorClass; 3],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("negative irregularity q = {0}: branch data is inconsistent")]
    NegativeIrregularity(i64),
}

/// The number of (−2)-curves among the Inoue branch components; each carries
/// two disjoint (−1)-curves on the cover, contracted to reach the minimal
/// model.
pub const INOUE_NODAL_CURVES: u32 = 4;

/// The Inoue branch data on the standard configuration:
/// `D₁ = Δ₁+f₂+S₁+S₂`, `D₂ = Δ₂+f₃`, `D₃ = Δ₃+2f₁+S₃+S₄`, with characters
/// `𝓛₁ = −K+f₁−E₄`, `𝓛₂ = −2K−E₅−E₆`, `𝓛₃ = −K+L−E₁−E₂−E₃`.
pub fn inoue_branch_data() -> BranchData {
    let t = NamedClassTable::standard();
    let minus_k = t.minus_k;
    let d1 = t.delta[0] + t.f[1] + t.s[0] + t.s[1];
    let d2 = t.delta[1] + t.f[2];
    let d3 = t.delta[2] + t.f[0] * 2 + t.s[2] + t.s[3];
    let l1 = minus_k + t.f[0] - t.e[3];
    let l2 = minus_k * 2 - t.e[4] - t.e[5];
    let l3 = minus_k + DivisorClass::new(1, [1, 1, 1, 0, 0, 0]);
    BranchData {
        d: [d1, d2, d3],
        l: [l1, l2, l3],
    }
}

/// One cover relation `Dⱼ + Dₖ ≡ 2𝓛ᵢ`, with both sides spelled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRelationCheck {
    /// Character index `i` (1-based); `j, k` are the other two.
    pub index: usize,
    pub lhs: DivisorClass,
    pub rhs: DivisorClass,
    pub ok: bool,
}

/// Lattice-level disjointness check of one nodal class against one branch
/// divisor: `Sₕ·Dᵢ` must be a nonpositive even number (the side can meet a
/// branch divisor only through copies of itself, each contributing −2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodalDisjointnessCheck {
    /// 1-based side index `h` and branch index `i`.
    pub side: usize,
    pub branch: usize,
    pub pairing: i64,
    pub ok: bool,
}

/// Validation report for branch data; failures are entries, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub relations: [CoverRelationCheck; 3],
    pub nodal: Vec<NodalDisjointnessCheck>,
    /// All branch classes are zero: the relations hold vacuously (empty
    /// branch, disconnected étale-trivial cover).
    pub degenerate: bool,
}

impl BranchReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.ok) && self.nodal.iter().all(|n| n.ok)
    }
}

/// Checks the cover relations and the lattice-level disjointness of the
/// four nodal classes from the branch divisors.
pub fn validate_branch_data(b: &BranchData) -> BranchReport {
    let relations = [0usize, 1, 2].map(|i| {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        let lhs = b.d[j] + b.d[k];
        let rhs = b.l[i] * 2;
        CoverRelationCheck {
            index: i + 1,
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    });
    let sides = NamedClassTable::standard().s;
    let mut nodal = Vec::new();
    for (h, s) in sides.iter().enumerate() {
        for (i, d) in b.d.iter().enumerate() {
            let pairing = s.intersect(d);
            nodal.push(NodalDisjointnessCheck {
                side: h + 1,
                branch: i + 1,
                pairing,
                ok: pairing <= 0 && pairing % 2 == 0,
            });
        }
    }
    BranchReport {
        relations,
        nodal,
        degenerate: b.d.iter().all(DivisorClass::is_zero),
    }
}

/// `χ(O)` of the cover: `4 + ½ Σ 𝓛ᵢ·(𝓛ᵢ + K_Y)` (with `χ(O_Y) = 1`).
///
/// Each summand `𝓛² + 𝓛·K` is even by adjunction parity, so the division
/// is exact for every lattice input.
pub fn cover_chi(b: &BranchData) -> i64 {
    let k = DivisorClass::canonical();
    let sum: i64 = b.l.iter().map(|l| l.intersect(&(*l + k))).sum();
    assert!(sum % 2 == 0, "adjunction parity violated in character sum");
    4 + sum / 2
}

/// `K²` of the cover: the self-intersection of `2K_Y + ΣDᵢ`.
pub fn cover_k2(b: &BranchData) -> i64 {
    bicanonical_invariant_class(b).self_intersection()
}

/// `2K_Y + ΣDᵢ`, the class whose sections form the invariant part of the
/// bicanonical system.
pub fn bicanonical_invariant_class(b: &BranchData) -> DivisorClass {
    DivisorClass::canonical() * 2 + b.d[0] + b.d[1] + b.d[2]
}

/// `K²` of the minimal model: contracting two (−1)-curves over each of the
/// `n2` nodal branch components raises `K²` by `2·n2`.
///
/// `n2` is an explicit input (4 for the Inoue data): which branch components
/// are (−2)-curves is curve geometry beyond the lattice.
pub fn minimal_k2(b: &BranchData, n2: u32) -> i64 {
    cover_k2(b) + 2 * i64::from(n2)
}

/// The four character dimensions `(h⁰(M), h⁰(M−𝓛₁), h⁰(M−𝓛₂), h⁰(M−𝓛₃))`
/// of the bicanonical system, each computed by exact interpolation.
pub fn bicanonical_character_dims(b: &BranchData, cfg: &PointConfiguration) -> [usize; 4] {
    let m = bicanonical_invariant_class(b);
    [
        h0(&m, cfg),
        h0(&(m - b.l[0]), cfg),
        h0(&(m - b.l[1]), cfg),
        h0(&(m - b.l[2]), cfg),
    ]
}

/// Anti-invariant bicanonical dimensions for the three involutions: the
/// part anti-invariant under the i-th involution is the sum of the two
/// character parts other than the i-th.
pub fn anti_invariant_dims(dims: [usize; 4]) -> [usize; 3] {
    [dims[2] + dims[3], dims[1] + dims[3], dims[1] + dims[2]]
}

/// `(p_g, q)` of the cover: `p_g = Σ h⁰(K_Y + 𝓛ᵢ)` by interpolation and
/// `q = 1 + p_g − χ`; a negative `q` signals inconsistent branch data.
pub fn geometric_genus_and_irregularity(
    b: &BranchData,
    cfg: &PointConfiguration,
) -> Result<(usize, i64), CoverError> {
    let k = DivisorClass::canonical();
    let p_g: usize = b.l.iter().map(|l| h0(&(k + *l), cfg)).sum();
    let q = 1 + p_g as i64 - cover_chi(b);
    if q < 0 {
        return Err(CoverError::NegativeIrregularity(q));
    }
    Ok((p_g, q))
}

/// The assembled numerical invariants of a bidouble cover and its minimal
/// model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInvariants {
    pub k2_cover: i64,
    pub chi_cover: i64,
    pub p_g: usize,
    pub q: i64,
    pub k2_minimal: i64,
    /// Invariant part followed by the three character parts.
    pub bicanonical_dims: [usize; 4],
}

/// Computes all invariants of the cover defined by `b` over `cfg`.
pub fn cover_invariants(
    b: &BranchData,
    cfg: &PointConfiguration,
    n2: u32,
) -> Result<CoverInvariants, CoverError> {
    let (p_g, q) = geometric_genus_and_irregularity(b, cfg)?;
    Ok(CoverInvariants {
        k2_cover: cover_k2(b),
        chi_cover: cover_chi(b),
        p_g,
        q,
        k2_minimal: minimal_k2(b, n2),
        bicanonical_dims: bicanonical_character_dims(b, cfg),
    })
}
