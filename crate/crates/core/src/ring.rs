//! Graded-commutative cohomology rings over GF(2) with monomial bases.
//!
//! Two kinds of ring exist:
//!
//! * **table rings** hold an explicit multiplication table on basis monomials
//!   (truncated polynomial rings, exterior algebras, and anything read from a
//!   catalog document);
//! * **tensor rings** are Künneth products of two rings. They keep both factors
//!   and multiply factorwise, and every basis element remembers its bidegree
//!   `(i, j)` and the factor basis elements it came from.
//!
//! A ring is known through `complete_through`. If the ring is *full* (the whole
//! cohomology of a closed manifold of that dimension) every higher degree is
//! zero; otherwise anything past the bound is an [`Error::UnsupportedDegree`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::{Echelon, Gf2Vec};

/// A ring generator. Display names are derived by the ring: a generator of the
/// k-th primitive factor of a product carries the suffix `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub base: String,
    /// 0-based index of the primitive factor the generator comes from.
    pub factor: usize,
    pub degree: usize,
    /// Smallest `e` with `g^e = 0`, if it is known within the truncation.
    pub nilpotence: Option<u32>,
}

impl Generator {
    pub fn new(base: impl Into<String>, degree: usize, nilpotence: Option<u32>) -> Self {
        assert!(degree >= 1, "generators live in positive degree");
        assert!(nilpotence.is_none_or(|e| e >= 2), "nilpotence exponent must be at least 2");
        Self {
            base: base.into(),
            factor: 0,
            degree,
            nilpotence,
        }
    }
}

/// Exponent vector over the ring's generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(generators: usize) -> Self {
        Monomial(vec![0; generators])
    }

    pub fn degree(&self, generators: &[Generator]) -> usize {
        self.0
            .iter()
            .zip(generators)
            .map(|(&e, g)| e as usize * g.degree)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// An element of `Hⁿ(-; Z/2)` as coordinates in the monomial basis of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Class {
    degree: usize,
    coords: Gf2Vec,
}

impl Z2Class {
    pub fn new(degree: usize, coords: Gf2Vec) -> Self {
        Self { degree, coords }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &Gf2Vec {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &Z2Class) -> Result<Z2Class> {
        if self.degree != other.degree || self.coords.len() != other.coords.len() {
            return Err(Error::Misuse(format!(
                "cannot add classes of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(Z2Class {
            degree: self.degree,
            coords: &self.coords + &other.coords,
        })
    }
}

/// A subspace of a fixed-degree cohomology group, stored in reduced echelon form
/// so that equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Subspace {
    degree: usize,
    rows: Echelon,
}

/// Proof that a class lies in a subspace: the subspace basis rows that sum to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub rows: Vec<usize>,
}

impl Z2Subspace {
    pub fn zero(degree: usize, ambient: usize) -> Self {
        Self {
            degree,
            rows: Echelon::empty(ambient),
        }
    }

    pub fn full(degree: usize, ambient: usize) -> Self {
        Self {
            degree,
            rows: Echelon::from_rows(ambient, (0..ambient).map(|i| Gf2Vec::unit(ambient, i))),
        }
    }

    pub fn span<'a>(degree: usize, ambient: usize, classes: impl IntoIterator<Item = &'a Z2Class>) -> Result<Self> {
        let mut rows = Echelon::empty(ambient);
        for c in classes {
            if c.degree != degree || c.coords.len() != ambient {
                return Err(Error::Misuse(format!(
                    "class of degree {} does not live in the degree-{degree} space",
                    c.degree
                )));
            }
            rows.insert(c.coords.clone());
        }
        Ok(Self { degree, rows })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows.width()
    }

    pub fn dim(&self) -> usize {
        self.rows.rank()
    }

    /// Echelon basis of the subspace.
    pub fn basis(&self) -> Vec<Z2Class> {
        self.rows
            .rows()
            .iter()
            .map(|r| Z2Class::new(self.degree, r.clone()))
            .collect()
    }

    fn check(&self, x: &Z2Class) -> Result<()> {
        if x.degree != self.degree || x.coords.len() != self.ambient_dim() {
            return Err(Error::Misuse(format!(
                "class of degree {} (dimension {}) tested against a degree-{} subspace of dimension {}",
                x.degree,
                x.coords.len(),
                self.degree,
                self.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn contains(&self, x: &Z2Class) -> Result<bool> {
        self.check(x)?;
        Ok(self.rows.contains(&x.coords))
    }

    /// Canonical representative of `x` modulo the subspace.
    pub fn residue(&self, x: &Z2Class) -> Result<Z2Class> {
        self.check(x)?;
        Ok(Z2Class::new(self.degree, self.rows.reduce(&x.coords).0))
    }

    /// Which basis rows sum to `x`, if it is a member.
    pub fn certificate(&self, x: &Z2Class) -> Result<Option<Membership>> {
        self.check(x)?;
        let (r, used) = self.rows.reduce(&x.coords);
        Ok(r.is_zero().then(|| Membership {
            rows: used.iter().enumerate().filter(|(_, &u)| u).map(|(k, _)| k).collect(),
        }))
    }

    pub fn sum(&self, other: &Z2Subspace) -> Result<Z2Subspace> {
        if self.degree != other.degree || self.ambient_dim() != other.ambient_dim() {
            return Err(Error::Misuse("subspaces of different spaces cannot be added".into()));
        }
        let mut rows = self.rows.clone();
        for r in other.rows.rows() {
            rows.insert(r.clone());
        }
        Ok(Z2Subspace {
            degree: self.degree,
            rows,
        })
    }
}

pub(crate) type TableKey = (usize, usize, usize, usize);

#[derive(Clone)]
pub(crate) struct TensorParts {
    pub left: Arc<RingPresentation>,
    pub right: Arc<RingPresentation>,
    /// Per degree `n`: blocks `(left_degree, start)` ordered by descending left degree.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone)]
pub(crate) enum Structure {
    /// Products of basis pairs, keyed with `(p, i) ≤ (q, j)`; absent entries are zero.
    Table(HashMap<TableKey, Gf2Vec>),
    Tensor(Box<TensorParts>),
}

/// A graded-commutative GF(2) algebra known through a fixed degree.
#[derive(Clone)]
pub struct RingPresentation {
    pub(crate) generators: Vec<Generator>,
    pub(crate) factor_count: usize,
    pub(crate) complete_through: usize,
    pub(crate) full: bool,
    pub(crate) basis: Vec<Vec<Monomial>>,
    pub(crate) lookup: Vec<HashMap<Monomial, usize>>,
    pub(crate) structure: Structure,
    /// For table rings: `Sq^j(g)` for each generator and `0 ≤ j ≤ deg g`, `None`
    /// where the target degree is past a truncation.
    pub(crate) sq_generators: Vec<Vec<Option<Gf2Vec>>>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingPresentation")
            .field(
                "generators",
                &(0..self.generators.len()).map(|g| self.generator_name(g)).collect::<Vec<_>>(),
            )
            .field("complete_through", &self.complete_through)
            .field("full", &self.full)
            .field("dims", &self.basis.iter().map(Vec::len).collect::<Vec<_>>())
            .finish()
    }
}

/// Everything needed to build a table ring.
pub struct TableSpec {
    pub generators: Vec<Generator>,
    pub complete_through: usize,
    pub full: bool,
    pub basis: Vec<Vec<Monomial>>,
    /// Nonzero products of basis pairs `(p, i) × (q, j)` for `p + q ≤ complete_through`.
    pub products: HashMap<TableKey, Gf2Vec>,
    /// `Sq^j(g)` for `0 ≤ j ≤ deg g`, `None` past the truncation.
    pub sq_generators: Vec<Vec<Option<Gf2Vec>>>,
}

fn normalize(p: usize, i: usize, q: usize, j: usize) -> TableKey {
    if (p, i) <= (q, j) {
        (p, i, q, j)
    } else {
        (q, j, p, i)
    }
}

impl RingPresentation {
    /// `Z/2[g₁, …, g_r] / (gᵢ^{eᵢ})`, known through `complete_through`. The
    /// generator squares are `Sq^{deg g} g = g²`, `Sq⁰ g = g` and `Sq^j g = 0` in
    /// between; callers must only use this for rings where the intermediate
    /// squares vanish (all degree-1 generators, or generators whose intermediate
    /// target degrees are zero).
    pub fn truncated_polynomial(generators: Vec<Generator>, complete_through: usize, full: bool) -> Result<Self> {
        let r = generators.len();
        let mut basis: Vec<Vec<Monomial>> = vec![Vec::new(); complete_through + 1];
        // enumerate exponent vectors of degree ≤ complete_through
        let mut stack = vec![(0usize, Monomial::one(r), 0usize)];
        while let Some((k, m, deg)) = stack.pop() {
            if k == r {
                basis[deg].push(m);
                continue;
            }
            let g = &generators[k];
            let mut e = 0u32;
            loop {
                let d = deg + e as usize * g.degree;
                if d > complete_through || g.nilpotence.is_some_and(|n| e >= n) {
                    break;
                }
                let mut m2 = m.clone();
                m2.0[k] = e;
                stack.push((k + 1, m2, d));
                e += 1;
            }
        }
        for b in &mut basis {
            // descending exponent order puts a₁² before a₁a₂ before a₂²
            b.sort_by(|x, y| y.cmp(x));
        }
        let lookup: Vec<HashMap<Monomial, usize>> = basis
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        let mut products = HashMap::new();
        for p in 0..=complete_through {
            for q in p..=complete_through - p {
                for (i, x) in basis[p].iter().enumerate() {
                    for (j, y) in basis[q].iter().enumerate() {
                        if (p, i) > (q, j) {
                            continue;
                        }
                        let m = Monomial(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect());
                        if let Some(&idx) = lookup[p + q].get(&m) {
                            products.insert((p, i, q, j), Gf2Vec::unit(basis[p + q].len(), idx));
                        }
                    }
                }
            }
        }
        let sq_generators = generators
            .iter()
            .enumerate()
            .map(|(k, g)| {
                (0..=g.degree)
                    .map(|j| {
                        let target = g.degree + j;
                        if target > complete_through {
                            return if full { Some(Gf2Vec::zeros(0)) } else { None };
                        }
                        let width = basis[target].len();
                        let mut m = Monomial::one(r);
                        if j == 0 {
                            m.0[k] = 1;
                        } else if j == g.degree {
                            m.0[k] = 2;
                        } else {
                            return Some(Gf2Vec::zeros(width));
                        }
                        Some(match lookup[target].get(&m) {
                            Some(&idx) => Gf2Vec::unit(width, idx),
                            None => Gf2Vec::zeros(width),
                        })
                    })
                    .collect()
            })
            .collect();
        Self::from_table(TableSpec {
            generators,
            complete_through,
            full,
            basis,
            products,
            sq_generators,
        })
    }

    /// Builds and validates a table ring: unit, commutativity by construction,
    /// associativity, monomial labels that are genuine products, and the
    /// unstable-square identities on generators.
    pub fn from_table(spec: TableSpec) -> Result<Self> {
        let TableSpec {
            generators,
            complete_through,
            full,
            basis,
            products,
            sq_generators,
        } = spec;
        let corrupt = |msg: String| Err(Error::CorruptRingData(msg));
        if basis.len() != complete_through + 1 {
            return corrupt(format!(
                "basis lists {} degrees, expected {}",
                basis.len(),
                complete_through + 1
            ));
        }
        if basis[0] != vec![Monomial::one(generators.len())] {
            return corrupt("degree-0 basis must be exactly {1}".into());
        }
        for (n, b) in basis.iter().enumerate() {
            for m in b {
                if m.0.len() != generators.len() || m.degree(&generators) != n {
                    return corrupt(format!("monomial {:?} listed in degree {n}", m.0));
                }
            }
        }
        let lookup: Vec<HashMap<Monomial, usize>> = basis
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        if lookup.iter().zip(&basis).any(|(l, b)| l.len() != b.len()) {
            return corrupt("repeated basis monomial".into());
        }
        for (&(p, i, q, j), v) in &products {
            if p + q > complete_through || i >= basis[p].len() || j >= basis[q].len() {
                return corrupt(format!("product entry ({p},{i})×({q},{j}) is out of range"));
            }
            if v.len() != basis[p + q].len() || (p, i) > (q, j) {
                return corrupt(format!("malformed product entry ({p},{i})×({q},{j})"));
            }
        }
        if sq_generators.len() != generators.len() {
            return corrupt("Steenrod table must list every generator".into());
        }
        let ring = RingPresentation {
            factor_count: 1,
            complete_through,
            full,
            lookup,
            structure: Structure::Table(products),
            sq_generators,
            basis,
            generators,
        };
        ring.validate_table()?;
        Ok(ring)
    }

    fn validate_table(&self) -> Result<()> {
        let d = self.complete_through;
        // unit
        for n in 0..=d {
            for i in 0..self.basis[n].len() {
                if self.mul_basis(0, 0, n, i)? != Gf2Vec::unit(self.basis[n].len(), i) {
                    return Err(Error::CorruptRingData(format!("1 does not act as the unit on degree {n}")));
                }
            }
        }
        // associativity on basis triples
        for p in 1..=d {
            for q in 1..=d - p {
                for r in 1..=d - p - q {
                    for i in 0..self.basis[p].len() {
                        for j in 0..self.basis[q].len() {
                            let xy = self.cup(&self.basis_class(p, i), &self.basis_class(q, j))?;
                            for k in 0..self.basis[r].len() {
                                let z = self.basis_class(r, k);
                                let left = self.cup(&xy, &z)?;
                                let yz = self.cup(&self.basis_class(q, j), &z)?;
                                let right = self.cup(&self.basis_class(p, i), &yz)?;
                                if left != right {
                                    return Err(Error::CorruptRingData(format!(
                                        "product is not associative on degrees ({p}, {q}, {r})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        // each basis monomial is the product of its first generator with the rest
        for n in 1..=d {
            for (idx, m) in self.basis[n].iter().enumerate() {
                let (g, rest) = self.split_first_generator(m)?;
                let prod = self.cup(&self.generator_class(g)?, &rest)?;
                if prod != self.basis_class(n, idx) {
                    return Err(Error::CorruptRingData(format!(
                        "basis label {} is not the product of its generators",
                        self.monomial_label(m)
                    )));
                }
            }
        }
        for (k, g) in self.generators.iter().enumerate() {
            let table = &self.sq_generators[k];
            if table.len() != g.degree + 1 {
                return Err(Error::CorruptRingData(format!(
                    "Steenrod table of {} must list Sq^0..Sq^{}",
                    self.generator_name(k),
                    g.degree
                )));
            }
            for (j, entry) in table.iter().enumerate() {
                let target = g.degree + j;
                match entry {
                    Some(v) if v.len() != self.dim(target).unwrap_or(usize::MAX) => {
                        return Err(Error::CorruptRingData(format!(
                            "Sq^{j}({}) has the wrong length",
                            self.generator_name(k)
                        )));
                    }
                    None if target <= d || self.full => {
                        return Err(Error::CorruptRingData(format!(
                            "Sq^{j}({}) is missing",
                            self.generator_name(k)
                        )));
                    }
                    _ => {}
                }
            }
            let gc = self.generator_class(k)?;
            if table[0].as_ref() != Some(gc.coords()) {
                return Err(Error::CorruptRingData(format!("Sq^0({}) must be the identity", self.generator_name(k))));
            }
            if 2 * g.degree <= d || self.full {
                let sq = self.cup(&gc, &gc)?;
                if table[g.degree].as_ref() != Some(sq.coords()) {
                    return Err(Error::CorruptRingData(format!(
                        "Sq^{}({}) must be its square",
                        g.degree,
                        self.generator_name(k)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Künneth tensor product `H*(M₁) ⊗ H*(M₂)` through `max_degree`.
    pub fn kunneth_tensor(left: &Arc<RingPresentation>, right: &Arc<RingPresentation>, max_degree: usize) -> Result<Self> {
        let achievable = Self::achievable_degree(left, right);
        if max_degree > achievable {
            return Err(Error::UnsupportedDegree {
                needed: max_degree,
                available: achievable,
                context: "the Künneth product of the factor rings".into(),
            });
        }
        let full = left.full && right.full && max_degree == left.complete_through + right.complete_through;
        let mut generators = left.generators.clone();
        generators.extend(right.generators.iter().map(|g| Generator {
            factor: g.factor + left.factor_count,
            ..g.clone()
        }));
        let mut basis = Vec::with_capacity(max_degree + 1);
        let mut blocks = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let mut b = Vec::new();
            let mut blk = Vec::new();
            for i in (0..=n).rev() {
                let (lb, rb) = (left.basis_in(i), right.basis_in(n - i));
                if lb.is_empty() || rb.is_empty() {
                    continue;
                }
                blk.push((i, b.len()));
                for l in lb {
                    for r in rb {
                        let mut m = l.0.clone();
                        m.extend_from_slice(&r.0);
                        b.push(Monomial(m));
                    }
                }
            }
            basis.push(b);
            blocks.push(blk);
        }
        let lookup = basis
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        Ok(RingPresentation {
            generators,
            factor_count: left.factor_count + right.factor_count,
            complete_through: max_degree,
            full,
            basis,
            lookup,
            structure: Structure::Tensor(Box::new(TensorParts {
                left: Arc::clone(left),
                right: Arc::clone(right),
                blocks,
            })),
            sq_generators: Vec::new(),
        })
    }

    /// Highest degree through which the product of the two rings is determined.
    pub fn achievable_degree(left: &RingPresentation, right: &RingPresentation) -> usize {
        match (left.full, right.full) {
            (true, true) => left.complete_through + right.complete_through,
            (true, false) => right.complete_through,
            (false, true) => left.complete_through,
            (false, false) => left.complete_through.min(right.complete_through),
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_name(&self, k: usize) -> String {
        let g = &self.generators[k];
        if self.factor_count == 1 {
            g.base.clone()
        } else if g.base.ends_with(|c: char| c.is_ascii_digit()) {
            format!("{}_{}", g.base, g.factor + 1)
        } else {
            format!("{}{}", g.base, g.factor + 1)
        }
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    /// Whether every degree past `complete_through` is known to vanish.
    pub fn is_full(&self) -> bool {
        self.full
    }

    /// Number of primitive factors the ring was assembled from.
    pub fn factor_count(&self) -> usize {
        self.factor_count
    }

    pub(crate) fn truncation_error(&self, needed: usize) -> Error {
        Error::UnsupportedDegree {
            needed,
            available: self.complete_through,
            context: "the cohomology ring".into(),
        }
    }

    fn basis_in(&self, n: usize) -> &[Monomial] {
        self.basis.get(n).map_or(&[], Vec::as_slice)
    }

    /// Basis monomials of degree `n`.
    pub fn basis(&self, n: usize) -> Result<&[Monomial]> {
        if n <= self.complete_through || self.full {
            Ok(self.basis_in(n))
        } else {
            Err(self.truncation_error(n))
        }
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        self.basis(n).map(<[Monomial]>::len)
    }

    pub fn monomial_label(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let name = self.generator_name(k);
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn basis_label(&self, n: usize, i: usize) -> String {
        self.monomial_label(&self.basis[n][i])
    }

    /// `x` written as a sum of basis monomials.
    pub fn format_class(&self, x: &Z2Class) -> String {
        let terms: Vec<String> = x.coords.ones().map(|i| self.basis_label(x.degree, i)).collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Reads a sum of basis labels such as `a1^2 + a1 a2` (or `0`).
    pub fn parse_class(&self, degree: usize, text: &str) -> Result<Z2Class> {
        let width = self.dim(degree)?;
        let mut v = Gf2Vec::zeros(width);
        let text = text.trim();
        if text == "0" {
            return Ok(Z2Class::new(degree, v));
        }
        for term in text.split('+') {
            let norm = term.split_whitespace().collect::<Vec<_>>().join(" ");
            let idx = (0..width)
                .find(|&i| self.basis_label(degree, i) == norm)
                .ok_or_else(|| Error::Document(format!("{norm:?} is not a degree-{degree} basis monomial")))?;
            v.flip(idx);
        }
        Ok(Z2Class::new(degree, v))
    }

    pub fn zero(&self, degree: usize) -> Result<Z2Class> {
        Ok(Z2Class::new(degree, Gf2Vec::zeros(self.dim(degree)?)))
    }

    pub fn one(&self) -> Z2Class {
        Z2Class::new(0, Gf2Vec::unit(1, 0))
    }

    pub(crate) fn basis_class(&self, n: usize, i: usize) -> Z2Class {
        Z2Class::new(n, Gf2Vec::unit(self.basis[n].len(), i))
    }

    /// Basis element `i` of degree `n`.
    pub fn basis_element(&self, n: usize, i: usize) -> Result<Z2Class> {
        let d = self.dim(n)?;
        if i >= d {
            return Err(Error::Misuse(format!("degree {n} has only {d} basis elements")));
        }
        Ok(self.basis_class(n, i))
    }

    pub fn generator_class(&self, k: usize) -> Result<Z2Class> {
        let g = &self.generators[k];
        let mut m = Monomial::one(self.generators.len());
        m.0[k] = 1;
        let n = g.degree;
        match self.lookup.get(n).and_then(|l| l.get(&m)) {
            Some(&i) => Ok(self.basis_class(n, i)),
            None if n > self.complete_through && !self.full => Err(self.truncation_error(n)),
            None => Err(Error::CorruptRingData(format!(
                "generator {} is not a basis element",
                self.generator_name(k)
            ))),
        }
    }

    /// First generator dividing `m` and the class of the cofactor.
    pub(crate) fn split_first_generator(&self, m: &Monomial) -> Result<(usize, Z2Class)> {
        let g = m.0.iter().position(|&e| e > 0).expect("non-unit monomial");
        let mut rest = m.clone();
        rest.0[g] -= 1;
        let n = rest.degree(&self.generators);
        match self.lookup[n].get(&rest) {
            Some(&i) => Ok((g, self.basis_class(n, i))),
            None => Err(Error::CorruptRingData(format!(
                "basis label {} has no cofactor {} in the basis",
                self.monomial_label(m),
                self.monomial_label(&rest)
            ))),
        }
    }

    /// Product of basis element `i` in degree `p` with basis element `j` in degree `q`.
    pub(crate) fn mul_basis(&self, p: usize, i: usize, q: usize, j: usize) -> Result<Gf2Vec> {
        let n = p + q;
        if n > self.complete_through {
            return if self.full {
                Ok(Gf2Vec::zeros(0))
            } else {
                Err(self.truncation_error(n))
            };
        }
        match &self.structure {
            Structure::Table(t) => Ok(t
                .get(&normalize(p, i, q, j))
                .cloned()
                .unwrap_or_else(|| Gf2Vec::zeros(self.basis[n].len()))),
            Structure::Tensor(parts) => {
                let (a, l1, r1) = parts.origin(p, i);
                let (b, l2, r2) = parts.origin(q, j);
                let lv = parts.left.mul_basis(a, l1, b, l2)?;
                let rv = parts.right.mul_basis(p - a, r1, q - b, r2)?;
                let mut out = Gf2Vec::zeros(self.basis[n].len());
                if lv.is_zero() || rv.is_zero() {
                    return Ok(out);
                }
                for li in lv.ones() {
                    for ri in rv.ones() {
                        out.flip(parts.index(n, a + b, li, ri));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Cup product.
    pub fn cup(&self, x: &Z2Class, y: &Z2Class) -> Result<Z2Class> {
        self.check_class(x)?;
        self.check_class(y)?;
        let n = x.degree + y.degree;
        let width = self.dim(n)?;
        let mut out = Gf2Vec::zeros(width);
        for i in x.coords.ones() {
            for j in y.coords.ones() {
                out.xor_assign(&self.mul_basis(x.degree, i, y.degree, j)?);
            }
        }
        Ok(Z2Class::new(n, out))
    }

    pub fn check_class(&self, x: &Z2Class) -> Result<()> {
        let d = self.dim(x.degree)?;
        if d != x.coords.len() {
            return Err(Error::Misuse(format!(
                "class has {} coordinates but degree {} has dimension {d}",
                x.coords.len(),
                x.degree
            )));
        }
        Ok(())
    }

    pub(crate) fn tensor_parts(&self) -> Result<&TensorParts> {
        match &self.structure {
            Structure::Tensor(p) => Ok(p),
            Structure::Table(_) => Err(Error::Misuse("ring is not a recorded Künneth product".into())),
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.structure, Structure::Tensor(_))
    }

    /// The two factors of a product ring.
    pub fn factors(&self) -> Result<(&Arc<RingPresentation>, &Arc<RingPresentation>)> {
        let p = self.tensor_parts()?;
        Ok((&p.left, &p.right))
    }

    /// Cross product `x × y` of a class of the first factor with one of the second.
    pub fn cross(&self, x: &Z2Class, y: &Z2Class) -> Result<Z2Class> {
        let parts = self.tensor_parts()?;
        parts.left.check_class(x)?;
        parts.right.check_class(y)?;
        let n = x.degree + y.degree;
        let width = self.dim(n)?;
        let mut out = Gf2Vec::zeros(width);
        for li in x.coords.ones() {
            for ri in y.coords.ones() {
                out.flip(parts.index(n, x.degree, li, ri));
            }
        }
        Ok(Z2Class::new(n, out))
    }

    /// Pulls a class back from the first factor (`x × 1`).
    pub fn embed_left(&self, x: &Z2Class) -> Result<Z2Class> {
        self.cross(x, &self.tensor_parts()?.right.one())
    }

    /// Pulls a class back from the second factor (`1 × y`).
    pub fn embed_right(&self, y: &Z2Class) -> Result<Z2Class> {
        self.cross(&self.tensor_parts()?.left.one(), y)
    }

    /// Splits a class of a product ring into its bigraded pieces, in descending
    /// order of the first-factor degree. Each piece is a class of this ring.
    pub fn bigraded_components(&self, x: &Z2Class) -> Result<Vec<(usize, Z2Class)>> {
        let parts = self.tensor_parts()?;
        self.check_class(x)?;
        let n = x.degree;
        let width = x.coords.len();
        let mut out = Vec::new();
        for i in (0..=n).rev() {
            let mut v = Gf2Vec::zeros(width);
            if let Some(&(_, start)) = parts.blocks.get(n).and_then(|b| b.iter().find(|(a, _)| *a == i)) {
                let len = parts.left.basis_in(i).len() * parts.right.basis_in(n - i).len();
                for k in x.coords.ones().filter(|&k| k >= start && k < start + len) {
                    v.set(k, true);
                }
            }
            out.push((i, Z2Class::new(n, v)));
        }
        Ok(out)
    }

    /// `α = α₂₀ + α₁₁ + α₀₂` for a degree-2 class of a product ring.
    pub fn decompose(&self, x: &Z2Class) -> Result<[Z2Class; 3]> {
        if x.degree != 2 {
            return Err(Error::Misuse(format!("decompose expects a degree-2 class, got degree {}", x.degree)));
        }
        let parts = self.bigraded_components(x)?;
        let [(2, a20), (1, a11), (0, a02)] = <[(usize, Z2Class); 3]>::try_from(parts).expect("three bidegrees") else {
            unreachable!("bigraded components are listed in descending order");
        };
        Ok([a20, a11, a02])
    }

    /// `S₁ ⊗ S₂` as a subspace of this product ring: the span of cross products
    /// of basis rows.
    pub fn subspace_tensor(&self, s1: &Z2Subspace, s2: &Z2Subspace) -> Result<Z2Subspace> {
        let parts = self.tensor_parts()?;
        if s1.ambient_dim() != parts.left.dim(s1.degree)? || s2.ambient_dim() != parts.right.dim(s2.degree)? {
            return Err(Error::Misuse("subspaces do not live in the factor rings".into()));
        }
        let n = s1.degree + s2.degree;
        let mut crosses = Vec::new();
        for a in s1.basis() {
            for b in s2.basis() {
                crosses.push(self.cross(&a, &b)?);
            }
        }
        Z2Subspace::span(n, self.dim(n)?, &crosses)
    }

    /// Pairing `⟨x, [M]⟩` against the basis element `top` of degree `dim`.
    pub fn evaluate(&self, x: &Z2Class, top_degree: usize) -> bool {
        x.degree == top_degree && x.coords.len() == 1 && x.coords.get(0)
    }
}

impl TensorParts {
    /// `(left_degree, left_index, right_index)` of basis element `i` in degree `n`.
    pub(crate) fn origin(&self, n: usize, i: usize) -> (usize, usize, usize) {
        let blk = &self.blocks[n];
        let k = blk.partition_point(|&(_, start)| start <= i) - 1;
        let (a, start) = blk[k];
        let rw = self.right.basis_in(n - a).len();
        let off = i - start;
        (a, off / rw, off % rw)
    }

    pub(crate) fn index(&self, n: usize, a: usize, li: usize, ri: usize) -> usize {
        let &(_, start) = self.blocks[n]
            .iter()
            .find(|(d, _)| *d == a)
            .expect("bidegree present in the product basis");
        start + li * self.right.basis_in(n - a).len() + ri
    }
}
