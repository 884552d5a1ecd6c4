//! Exact rational group algebras of finite groups, subgroup sums `z(H)`,
//! two-sided ideal membership, and the "enough automorphisms" criterion.
//!
//! For a subgroup `H ≤ G`, `z(H)` is the sum of the elements of `H` inside
//! the group algebra. The criterion asks whether `z(H)` lies in the
//! two-sided ideal generated by `z(H₁), …, z(H_r)`; combined with the
//! externally supplied hypothesis that each quotient `S/Hᵢ` has trivial
//! Albanese kernel, it yields `T(S/H) = 0`.
//!
//! Coefficients are exact rationals rather than complex numbers: membership
//! of a rational element in an ideal generated by rational elements is a
//! linear system with rational data, so it holds over ℂ iff it holds over ℚ.
//!
//! The two-sided span is computed by enumerating all `|G|²` translates
//! `a·g·b` of each generator — fine for `|G| ≤ 256`, which is far beyond
//! the groups this crate is used on.

use std::fmt;

use num::{BigRational, FromPrimitive, One, Zero};
use thiserror::Error;

use crate::linalg::RowSpan;

/// A finite group presented by its multiplication table. The identity is
/// element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major table: `mult[a * order + b] = a·b`.
    mult: Vec<usize>,
    /// Inverse of each element, derived on construction.
    inv: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table must be square of positive size, got {rows} rows of widths {widths:?}")]
    NotSquare { rows: usize, widths: Vec<usize> },
    #[error("table entry {value} at ({row},{col}) is out of range 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("element 0 is not a two-sided identity (fails at element {0})")]
    BadIdentity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails on ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subgroup member {0} is out of range")]
    MemberOutOfRange(usize),
    #[error("subgroup does not contain the identity")]
    MissingIdentity,
    #[error("subgroup is not closed: {a}·{b} = {product} is not a member")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("coefficient vector has length {got}, group has order {want}")]
    LengthMismatch { got: usize, want: usize },
}

/// Above this order, associativity is spot-checked on a deterministic
/// pseudo-random sample instead of all `n³` triples.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;

impl FiniteGroup {
    /// Validates and wraps an explicit multiplication table.
    ///
    /// Checks the identity and inverse axioms for every element, and
    /// associativity on all triples for orders ≤ 64 (a fixed pseudo-random
    /// sample of 8n² triples above that).
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(GroupError::NotSquare {
                rows: order,
                widths: rows.iter().map(Vec::len).collect(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v, order });
                }
            }
        }
        let mult: Vec<usize> = rows.into_iter().flatten().collect();
        let at = |a: usize, b: usize| mult[a * order + b];

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupError::BadIdentity(x));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == 0 && at(b, a) == 0) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::NoInverse(a)),
            }
        }

        let check = |a: usize, b: usize, c: usize| -> Result<(), GroupError> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(GroupError::NotAssociative { a, b, c });
            }
            Ok(())
        };
        if order <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // xorshift with a fixed seed keeps the sample reproducible.
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % order as u64) as usize
            };
            for _ in 0..8 * order * order {
                check(next(), next(), next())?;
            }
        }

        Ok(FiniteGroup { order, mult, inv })
    }

    /// The elementary abelian group `(ℤ/2)ᵏ`; elements are bitmasks, the
    /// operation is XOR.
    pub fn elementary_abelian_2(k: u32) -> Self {
        let n = 1usize << k;
        let rows = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
        FiniteGroup::from_table(rows).expect("xor table is a group")
    }

    /// The cyclic group of order `n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(rows).expect("addition table is a group")
    }

    /// The Klein four-group `(ℤ/2)²` with its three involutions 1, 2, 3.
    pub fn klein_four() -> Self {
        FiniteGroup::elementary_abelian_2(2)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The table rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.mult[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }
}

/// A subgroup given by its member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    members: Vec<usize>,
}

impl SubgroupSpec {
    /// Sorts and deduplicates the member list; validity is checked against
    /// a group by [`SubgroupSpec::validate`].
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        SubgroupSpec { members }
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial() -> Self {
        SubgroupSpec { members: vec![0] }
    }

    /// The cyclic subgroup generated by one element.
    pub fn generated_by(g: &FiniteGroup, x: usize) -> Self {
        let mut members = vec![0];
        let mut cur = x;
        while cur != 0 {
            members.push(cur);
            cur = g.mul(cur, x);
        }
        SubgroupSpec::new(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Checks membership range, identity, closure, and inverses.
    pub fn validate(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        for &x in &self.members {
            if x >= g.order() {
                return Err(GroupError::MemberOutOfRange(x));
            }
        }
        if !self.members.contains(&0) {
            return Err(GroupError::MissingIdentity);
        }
        for &a in &self.members {
            for &b in &self.members {
                let product = g.mul(a, b);
                if self.members.binary_search(&product).is_err() {
                    return Err(GroupError::NotClosed { a, b, product });
                }
            }
        }
        // Inverses follow from closure in a finite group, but check anyway:
        // a corrupted table could break the argument.
        for &a in &self.members {
            if self.members.binary_search(&g.inverse(a)).is_err() {
                return Err(GroupError::NotClosed { a, b: a, product: g.inverse(a) });
            }
        }
        Ok(())
    }
}

/// An element of the rational group algebra: one coefficient per group
/// element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: Vec<BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    /// The algebra unit: coefficient 1 on the group identity.
    pub fn one(order: usize) -> Self {
        GroupAlgebraElement::basis(order, 0)
    }

    /// The basis element supported on group element `x`.
    pub fn basis(order: usize, x: usize) -> Self {
        let mut e = GroupAlgebraElement::zero(order);
        e.coeffs[x] = BigRational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        GroupAlgebraElement {
            coeffs: coeffs
                .iter()
                .map(|&c| BigRational::from_i64(c).unwrap())
                .collect(),
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Convolution product in the algebra of `g`.
    pub fn mul_in(&self, other: &Self, g: &FiniteGroup) -> Self {
        assert_eq!(self.len(), g.order());
        assert_eq!(other.len(), g.order());
        let mut out = GroupAlgebraElement::zero(g.order());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[g.mul(i, j)] += a * b;
            }
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

/// The subgroup sum `z(H) = Σ_{h∈H} h`: coefficient 1 on each member.
pub fn z_of(h: &SubgroupSpec, g: &FiniteGroup) -> Result<GroupAlgebraElement, GroupError> {
    h.validate(g)?;
    let mut e = GroupAlgebraElement::zero(g.order());
    for &x in h.members() {
        e.coeffs[x] = BigRational::one();
    }
    Ok(e)
}

fn two_sided_span(gens: &[GroupAlgebraElement], g: &FiniteGroup) -> RowSpan {
    let n = g.order();
    let mut span = RowSpan::new(n);
    'outer: for gen in gens {
        assert_eq!(gen.len(), n, "generator length must match the group order");
        for a in 0..n {
            for b in 0..n {
                // (a·gen·b) has coefficient gen[x] at position a·x·b.
                let mut v = vec![BigRational::zero(); n];
                for (x, c) in gen.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        v[g.mul(g.mul(a, x), b)] += c;
                    }
                }
                span.insert(v);
                if span.dim() == n {
                    break 'outer; // already the whole algebra
                }
            }
        }
    }
    span
}

/// A linearly independent basis of the two-sided ideal generated by `gens`
/// (group elements acting as units suffice to span all two-sided
/// translates).
pub fn two_sided_ideal_basis(
    gens: &[GroupAlgebraElement],
    g: &FiniteGroup,
) -> Vec<GroupAlgebraElement> {
    two_sided_span(gens, g)
        .basis()
        .iter()
        .map(|row| GroupAlgebraElement::from_coeffs(row.clone()))
        .collect()
}

/// True iff `x` lies in the two-sided ideal generated by `gens`.
pub fn ideal_contains(
    x: &GroupAlgebraElement,
    gens: &[GroupAlgebraElement],
    g: &FiniteGroup,
) -> bool {
    assert_eq!(x.len(), g.order());
    two_sided_span(gens, g).contains(x.coeffs.clone())
}

/// Outcome of the "enough automorphisms" criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismsVerdict {
    /// Condition (1): `z(H)` lies in the two-sided ideal of the `z(Hᵢ)`.
    pub membership: bool,
    /// Condition (2), per listed subgroup: the hypothesis that the quotient
    /// by `Hᵢ` has trivial Albanese kernel. Externally supplied.
    pub quotient_flags: Vec<bool>,
    /// Criterion satisfied: condition (1) and all flags.
    pub satisfied: bool,
}

/// Evaluates the criterion: computes condition (1) exactly and combines it
/// with the caller-supplied condition (2) flags (one per subgroup in `hs`).
pub fn enough_automorphisms_check(
    g: &FiniteGroup,
    h: &SubgroupSpec,
    hs: &[SubgroupSpec],
    quotient_flags: &[bool],
) -> Result<AutomorphismsVerdict, GroupError> {
    assert_eq!(
        hs.len(),
        quotient_flags.len(),
        "one quotient flag per subgroup"
    );
    let zh = z_of(h, g)?;
    let gens = hs.iter().map(|hi| z_of(hi, g)).collect::<Result<Vec<_>, _>>()?;
    let membership = ideal_contains(&zh, &gens, g);
    let satisfied = membership && quotient_flags.iter().all(|&f| f);
    Ok(AutomorphismsVerdict {
        membership,
        quotient_flags: quotient_flags.to_vec(),
        satisfied,
    })
}

/// Every subgroup of `g`, by brute-force closure enumeration: grow each
/// known subgroup by one element and close under multiplication until
/// nothing new appears. Exponential in principle; meant for the small
/// fixture groups (order ≤ 16).
pub fn enumerate_subgroups(g: &FiniteGroup) -> Vec<SubgroupSpec> {
    let closure = |seed: Vec<usize>| -> Vec<usize> {
        let mut members = seed;
        members.push(0);
        members.sort_unstable();
        members.dedup();
        loop {
            let mut grew = false;
            let snapshot = members.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    let p = g.mul(a, b);
                    if members.binary_search(&p).is_err() {
                        let at = members.partition_point(|&x| x < p);
                        members.insert(at, p);
                        grew = true;
                    }
                }
            }
            if !grew {
                return members;
            }
        }
    };
    let mut found: Vec<Vec<usize>> = vec![closure(vec![])];
    loop {
        let mut grew = false;
        for base in found.clone() {
            for x in 0..g.order() {
                if base.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = base.clone();
                seed.push(x);
                let sub = closure(seed);
                if !found.contains(&sub) {
                    found.push(sub);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    found.sort();
    found.into_iter().map(SubgroupSpec::new).collect()
}

/// A parsed group file: the group plus its named subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub group: FiniteGroup,
    pub subgroups: Vec<(String, SubgroupSpec)>,
}

#[derive(Debug, Error)]
pub enum GroupFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid group: {source}")]
    BadGroup { line: usize, source: GroupError },
    #[error("file is empty")]
    Empty,
}

/// Parses the structured-text group format:
///
/// ```text
/// # comment
/// 4                       <- order n
/// 0 1 2 3                 <- n table rows of n element indices
/// 1 0 3 2
/// 2 3 0 1
/// 3 2 1 0
/// subgroup G1: 0 1        <- named subgroup blocks
/// subgroup G2: 0 2
/// ```
///
/// Blank lines and `#` comments are allowed anywhere.
pub fn parse_group_file(text: &str) -> Result<GroupFile, GroupFileError> {
    let syntax = |line: usize, message: String| GroupFileError::Syntax { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, content)| !content.is_empty());

    let (first_line, first) = lines.next().ok_or(GroupFileError::Empty)?;
    let order: usize = first
        .parse()
        .map_err(|_| syntax(first_line, format!("expected the group order, got `{first}`")))?;
    if order == 0 {
        return Err(syntax(first_line, "group order must be positive".into()));
    }

    let mut rows = Vec::with_capacity(order);
    let mut table_line = first_line;
    for _ in 0..order {
        let (lineno, content) = lines.next().ok_or_else(|| {
            syntax(table_line, format!("expected {order} multiplication table rows"))
        })?;
        table_line = lineno;
        let row = content
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<usize>().map_err(|_| {
                    syntax(lineno, format!("column {}: invalid element index `{tok}`", col + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(syntax(lineno, format!("expected {order} entries, got {}", row.len())));
        }
        rows.push(row);
    }
    let group = FiniteGroup::from_table(rows)
        .map_err(|source| GroupFileError::BadGroup { line: table_line, source })?;

    let mut subgroups = Vec::new();
    for (lineno, content) in lines {
        let rest = content.strip_prefix("subgroup").ok_or_else(|| {
            syntax(lineno, format!("expected `subgroup <name>: <indices>`, got `{content}`"))
        })?;
        let (name, members) = rest.split_once(':').ok_or_else(|| {
            syntax(lineno, "missing `:` after the subgroup name".to_string())
        })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(syntax(lineno, "subgroup name must not be empty".into()));
        }
        let members = members
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<usize>().map_err(|_| {
                    syntax(lineno, format!("member {}: invalid element index `{tok}`", col + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let spec = SubgroupSpec::new(members);
        spec.validate(&group)
            .map_err(|source| GroupFileError::BadGroup { line: lineno, source })?;
        subgroups.push((name.to_string(), spec));
    }

    Ok(GroupFile { group, subgroups })
}

/// Renders a group and its named subgroups in the file format accepted by
/// [`parse_group_file`].
pub fn render_group_file(group: &FiniteGroup, subgroups: &[(String, SubgroupSpec)]) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", group.order()));
    for row in group.table_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    for (name, spec) in subgroups {
        let cells: Vec<String> = spec.members().iter().map(usize::to_string).collect();
        out.push_str(&format!("subgroup {name}: {}\n", cells.join(" ")));
    }
    out
}
