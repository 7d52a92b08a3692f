//! Generalized Cartan matrices, their minimal realization, weights and real
//! coroots.
//!
//! Weights are stored as integer vectors in the basis
//! `(Λ_0, …, Λ_{n-1}, d_1, …, d_c)` where `Λ_i` are the fundamental weights
//! (dual to the simple coroots) and `d_k` span the null-space completion
//! (`c` is the corank of the matrix, so the ambient dimension is
//! `2n - rank(a)`).  For untwisted affine presets `d_1 = δ`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A set of Dynkin nodes, stored as a bit mask (rank ≤ 64).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn all(n: usize) -> NodeSet {
        if n >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> NodeSet {
        let mut s = NodeSet::EMPTY;
        for i in nodes {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

/// An integral weight in the realization's coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Weight {
        Weight(vec![0; dim])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + k * b)
                .collect(),
        )
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A real coroot `α = Σ c_i α_i^∨` together with its associated root `α^∨`.
///
/// Coroots are only created by reflecting simple coroots, so every value of
/// this type is a real coroot. Equality, ordering and hashing use the coroot
/// coordinates only.
#[derive(Clone, Debug)]
pub struct Coroot {
    coords: Vec<i64>,
    root_coords: Vec<i64>,
    root: Weight,
}

impl PartialEq for Coroot {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Coroot {}

impl PartialOrd for Coroot {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coroot {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl core::hash::Hash for Coroot {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Coroot {
    /// Simple-coroot coordinates `c_i`.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Simple-root coordinates of the associated root.
    pub fn root_coords(&self) -> &[i64] {
        &self.root_coords
    }

    /// The associated root `α^∨` as a weight.
    pub fn root(&self) -> &Weight {
        &self.root
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Coroot {
        Coroot {
            coords: self.coords.iter().map(|c| -c).collect(),
            root_coords: self.root_coords.iter().map(|c| -c).collect(),
            root: -&self.root,
        }
    }

    /// Index `i` if this is the simple coroot `α_i^∨`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.coords.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Display for Coroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A symmetrizable generalized Cartan matrix with `a[i][j] = ⟨α_i^∨, α_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    a: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
}

impl Gcm {
    /// Validates the matrix; computes a symmetrizer when none is given.
    pub fn new(a: Vec<Vec<i64>>, symmetrizer: Option<Vec<Rational>>) -> Result<Gcm> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidGcm("empty matrix"));
        }
        if n > 64 {
            return Err(Error::InvalidGcm("rank above 64 is not supported"));
        }
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGcm("matrix is not square"));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::InvalidGcm("diagonal entries must be 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::InvalidGcm("off-diagonal entries must be non-positive"));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidGcm("a[i][j] = 0 must imply a[j][i] = 0"));
                }
            }
        }
        let d = match symmetrizer {
            Some(d) => {
                if d.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: d.len() });
                }
                if d.iter().any(|x| !x.is_positive()) {
                    return Err(Error::InvalidGcm("symmetrizer entries must be positive"));
                }
                d
            }
            None => compute_symmetrizer(&a)?,
        };
        for i in 0..n {
            for j in 0..n {
                if d[i] * Rational::from(a[i][j]) != d[j] * Rational::from(a[j][i]) {
                    return Err(Error::InvalidGcm("matrix is not symmetrizable"));
                }
            }
        }
        Ok(Gcm { a, symmetrizer: d })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// Rank of the matrix over ℚ.
    pub fn matrix_rank(&self) -> usize {
        independent_columns(&self.a).len()
    }

    /// Cartan matrix of a named type.
    ///
    /// Finite types `A<n>`, `B<n>`, `C<n>`, `D<n>`, `E6`–`E8`, `F4`, `G2`
    /// use Bourbaki numbering starting at node 1; untwisted affine types
    /// `A<n>~`, `B<n>~`, `C<n>~`, `D<n>~`, `G2~` add node 0.
    pub fn preset(name: &str) -> Result<(Gcm, usize)> {
        let (base, affine) = match name.strip_suffix('~') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let mut chars = base.chars();
        let family = chars.next().ok_or(Error::Parse("empty Cartan type"))?;
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse("Cartan type rank is not a number"))?;
        let a = if affine {
            affine_matrix(family, n)?
        } else {
            finite_matrix(family, n)?
        };
        Ok((Gcm::new(a, None)?, if affine { 0 } else { 1 }))
    }
}

fn compute_symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j == i || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Rational::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidGcm("matrix is not symmetrizable"));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap()).collect())
}

/// Indices of a maximal linearly independent set of columns, chosen greedily
/// from the highest index downwards.
fn independent_columns(a: &[Vec<i64>]) -> Vec<usize> {
    let n = a.len();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    for j in (0..n).rev() {
        let mut v: Vec<Rational> = (0..n).map(|i| Rational::from(a[i][j])).collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let f = v[p] / b[p];
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= f * y;
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            basis.push(v);
            pivots.push(p);
            chosen.push(j);
        }
    }
    chosen
}

/// A primitive integer kernel vector of `a` when the corank is one.
fn kernel_vector(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let indep = independent_columns(a);
    if indep.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|j| !indep.contains(j))?;
    // Solve Σ_{j≠free} a[·][j] x_j = -a[·][free] over ℚ.
    let cols: Vec<usize> = (0..n).filter(|&j| j != free).collect();
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|&j| Rational::from(a[i][j])).collect();
            row.push(Rational::from(-a[i][free]));
            row
        })
        .collect();
    let k = cols.len();
    let mut r = 0;
    let mut pivot_col = vec![usize::MAX; n];
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c];
        for x in m[r].iter_mut() {
            *x /= pv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x -= f * y;
                }
            }
        }
        pivot_col[r] = c;
        r += 1;
    }
    let mut x = vec![Rational::zero(); n];
    x[free] = Rational::one();
    for (row, &c) in pivot_col.iter().enumerate().take(r) {
        x[cols[c]] = m[row][k];
    }
    let lcm = x.iter().fold(1i64, |l, q| num_integer::lcm(l, *q.denom()));
    let mut ints: Vec<i64> = x.iter().map(|q| (q * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, &v| num_integer::gcd(g, v));
    if g > 1 {
        ints.iter_mut().for_each(|v| *v /= g);
    }
    if ints.iter().any(|&v| v < 0) {
        ints.iter_mut().for_each(|v| *v = -*v);
    }
    Some(ints)
}

fn finite_matrix(family: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..len.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match (family, n) {
        ('A', n) if n >= 1 => chain(&mut a, n),
        ('B', n) if n >= 2 => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        ('C', n) if n >= 2 => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        ('D', n) if n >= 4 => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4.
            let edges: Vec<(usize, usize)> = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
                .into_iter()
                .filter(|&(x, y)| x <= n && y <= n)
                .collect();
            for (x, y) in edges {
                a[x - 1][y - 1] = -1;
                a[y - 1][x - 1] = -1;
            }
        }
        ('F', 4) => {
            chain(&mut a, 4);
            a[1][2] = -2;
        }
        ('G', 2) => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(Error::Parse("unknown finite Cartan type")),
    }
    Ok(a)
}

fn affine_matrix(family: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let fin = finite_matrix(family, n)?;
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    a[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = fin[i][j];
        }
    }
    let mut link = |node: usize, to_zero: i64, from_zero: i64| {
        // a[0][node] = ⟨α_0^∨, α_node⟩
        a[0][node] = from_zero;
        a[node][0] = to_zero;
    };
    match (family, n) {
        ('A', 1) => link(1, -2, -2),
        ('A', n) if n >= 2 => {
            link(1, -1, -1);
            link(n, -1, -1);
        }
        ('B', n) if n >= 3 => link(2, -1, -1),
        ('C', n) if n >= 2 => link(1, -2, -1),
        ('D', n) if n >= 4 => link(2, -1, -1),
        ('G', 2) => link(2, -1, -1),
        _ => return Err(Error::Parse("unsupported affine Cartan type")),
    }
    Ok(a)
}

/// The minimal realization of a generalized Cartan matrix.
#[derive(Clone, Debug)]
pub struct Realization {
    gcm: Gcm,
    name: String,
    first_label: usize,
    simple_roots: Vec<Weight>,
    null_nodes: Vec<usize>,
    marks: Option<Vec<i64>>,
}

impl Realization {
    pub fn new(gcm: Gcm, name: impl Into<String>, first_label: usize) -> Realization {
        let n = gcm.rank();
        let indep = independent_columns(gcm.matrix());
        let null_nodes: Vec<usize> = (0..n).filter(|j| !indep.contains(j)).collect();
        let dim = n + null_nodes.len();
        let simple_roots = (0..n)
            .map(|i| {
                let mut v = vec![0i64; dim];
                for (j, x) in v.iter_mut().enumerate().take(n) {
                    *x = gcm.entry(j, i);
                }
                if let Some(k) = null_nodes.iter().position(|&m| m == i) {
                    v[n + k] = 1;
                }
                Weight(v)
            })
            .collect();
        let marks = kernel_vector(gcm.matrix()).filter(|m| m.iter().all(|&x| x > 0));
        Realization {
            gcm,
            name: name.into(),
            first_label,
            simple_roots,
            null_nodes,
            marks,
        }
    }

    /// Realization of a named Cartan type (see [`Gcm::preset`]).
    pub fn preset(name: &str) -> Result<Realization> {
        let (gcm, first) = Gcm::preset(name)?;
        Ok(Realization::new(gcm, name, first))
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of Dynkin nodes.
    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    /// Ambient dimension `2n - rank(a)`.
    pub fn dim(&self) -> usize {
        self.rank() + self.null_nodes.len()
    }

    pub fn corank(&self) -> usize {
        self.null_nodes.len()
    }

    /// Display label of the first node (1 for finite presets, 0 otherwise).
    pub fn first_label(&self) -> usize {
        self.first_label
    }

    pub fn label(&self, i: usize) -> usize {
        i + self.first_label
    }

    pub fn index_of_label(&self, label: usize) -> Result<usize> {
        label
            .checked_sub(self.first_label)
            .filter(|&i| i < self.rank())
            .ok_or(Error::IndexOutOfRange { index: label, rank: self.rank() })
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: mu.dim() })
        }
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        Weight(v)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.dim())
    }

    /// `ρ = Σ Λ_i`.
    pub fn rho(&self) -> Weight {
        let mut v = vec![0; self.dim()];
        v[..self.rank()].iter_mut().for_each(|x| *x = 1);
        Weight(v)
    }

    /// Weight with the given fundamental-weight coefficients and null part.
    pub fn weight(&self, fund: &[i64], null: &[i64]) -> Result<Weight> {
        if fund.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: fund.len() });
        }
        if null.len() > self.corank() {
            return Err(Error::DimensionMismatch { expected: self.corank(), found: null.len() });
        }
        let mut v = fund.to_vec();
        v.extend_from_slice(null);
        v.resize(self.dim(), 0);
        Ok(Weight(v))
    }

    /// `Σ k_i α_i`.
    pub fn root_lattice_element(&self, k: &[i64]) -> Weight {
        let mut out = self.zero_weight();
        for (i, &c) in k.iter().enumerate() {
            if c != 0 {
                out = out.add_scaled(&self.simple_roots[i], c);
            }
        }
        out
    }

    /// Null root `δ = Σ a_i α_i` for affine types (positive primitive kernel vector).
    pub fn null_root(&self) -> Option<Weight> {
        self.marks.as_ref().map(|m| self.root_lattice_element(m))
    }

    pub fn marks(&self) -> Option<&[i64]> {
        self.marks.as_deref()
    }

    /// Level of a weight for affine types, `⟨Σ a_i^∨ α_i^∨, μ⟩`, is not needed
    /// here; this returns `⟨α_i^∨, μ⟩`.
    pub fn pairing_simple(&self, i: usize, mu: &Weight) -> i64 {
        mu.0[i]
    }

    /// `⟨α, μ⟩ = Σ c_i ⟨α_i^∨, μ⟩`.
    pub fn pairing(&self, alpha: &Coroot, mu: &Weight) -> i64 {
        alpha.coords.iter().zip(&mu.0).map(|(c, m)| c * m).sum()
    }

    /// Pairing with a coroot given by raw coordinates.
    pub fn pairing_coords(&self, c: &[i64], mu: &Weight) -> i64 {
        c.iter().zip(&mu.0).map(|(c, m)| c * m).sum()
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        mu.0[..self.rank()].iter().all(|&x| x >= 0)
    }

    /// Nodes fixed by `μ`, i.e. `{i : ⟨α_i^∨, μ⟩ = 0}`; for dominant `μ`
    /// this generates the stabilizer `W_μ`.
    pub fn stabilizer(&self, mu: &Weight) -> NodeSet {
        NodeSet::from_nodes((0..self.rank()).filter(|&i| mu.0[i] == 0))
    }

    /// `s_i μ = μ - ⟨α_i^∨, μ⟩ α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Weight {
        let p = mu.0[i];
        if p == 0 {
            mu.clone()
        } else {
            mu.add_scaled(&self.simple_roots[i], -p)
        }
    }

    pub fn try_simple_reflection(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(mu)?;
        Ok(self.simple_reflection(i, mu))
    }

    /// `s_α μ = μ - ⟨α, μ⟩ α^∨`.
    pub fn coroot_reflection(&self, alpha: &Coroot, mu: &Weight) -> Weight {
        let p = self.pairing(alpha, mu);
        if p == 0 {
            mu.clone()
        } else {
            mu.add_scaled(&alpha.root, -p)
        }
    }

    pub fn simple_coroot(&self, i: usize) -> Coroot {
        let n = self.rank();
        let mut c = vec![0; n];
        c[i] = 1;
        Coroot {
            coords: c.clone(),
            root_coords: c,
            root: self.simple_roots[i].clone(),
        }
    }

    /// `s_i` applied to a coroot and its root simultaneously.
    pub fn reflect_coroot(&self, i: usize, alpha: &Coroot) -> Coroot {
        let n = self.rank();
        // ⟨α, α_i⟩ for the coroot, ⟨α_i^∨, α^∨⟩ for the root
        let p: i64 = (0..n).map(|j| alpha.coords[j] * self.gcm.entry(j, i)).sum();
        let q: i64 = (0..n).map(|j| alpha.root_coords[j] * self.gcm.entry(i, j)).sum();
        let mut coords = alpha.coords.clone();
        coords[i] -= p;
        let mut root_coords = alpha.root_coords.clone();
        root_coords[i] -= q;
        let root = alpha.root.add_scaled(&self.simple_roots[i], -q);
        Coroot { coords, root_coords, root }
    }

    /// Certifies that `c` is a real coroot by reducing it to a simple coroot.
    pub fn coroot_from_coords(&self, c: &[i64]) -> Result<Coroot> {
        let n = self.rank();
        if c.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.len() });
        }
        if c.iter().all(|&x| x <= 0) && c.iter().any(|&x| x < 0) {
            let neg: Vec<i64> = c.iter().map(|x| -x).collect();
            return Ok(self.coroot_from_coords(&neg)?.negated());
        }
        if c.iter().any(|&x| x < 0) || c.iter().all(|&x| x == 0) {
            return Err(Error::NotRealCoroot);
        }
        let mut cur = c.to_vec();
        let mut path = Vec::new();
        loop {
            let height: i64 = cur.iter().sum();
            if height == 1 {
                let i = cur.iter().position(|&x| x == 1).unwrap();
                let mut out = self.simple_coroot(i);
                for &j in path.iter().rev() {
                    out = self.reflect_coroot(j, &out);
                }
                return Ok(out);
            }
            let step = (0..n).find_map(|j| {
                let p: i64 = (0..n).map(|k| cur[k] * self.gcm.entry(k, j)).sum();
                (p > 0).then_some((j, p))
            });
            let Some((j, p)) = step else {
                return Err(Error::NotRealCoroot);
            };
            cur[j] -= p;
            if cur.iter().any(|&x| x < 0) {
                return Err(Error::NotRealCoroot);
            }
            path.push(j);
        }
    }

    /// All positive real coroots of height at most `bound`, sorted by
    /// (height, coordinates).
    pub fn positive_coroots_up_to(&self, bound: i64) -> Vec<Coroot> {
        let mut seen: BTreeMap<Vec<i64>, Coroot> = BTreeMap::new();
        if bound < 1 {
            return Vec::new();
        }
        let mut queue: VecDeque<Coroot> = (0..self.rank()).map(|i| self.simple_coroot(i)).collect();
        for c in &queue {
            seen.insert(c.coords.clone(), c.clone());
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.reflect_coroot(i, &c);
                if r.is_positive() && r.height() <= bound && !seen.contains_key(&r.coords) {
                    seen.insert(r.coords.clone(), r.clone());
                    queue.push_back(r);
                }
            }
        }
        let mut out: Vec<Coroot> = seen.into_values().collect();
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coords.cmp(&b.coords)));
        out
    }

    /// All positive coroots when the root system is finite, `None` otherwise.
    pub fn finite_positive_coroots(&self) -> Option<Vec<Coroot>> {
        // A finite root system has height at most the sum of the rank's Coxeter
        // bound; detect finiteness by closure stabilising below a generous bound.
        let mut bound = 8;
        let mut prev = self.positive_coroots_up_to(bound).len();
        loop {
            bound *= 2;
            let cur = self.positive_coroots_up_to(bound);
            if cur.len() == prev {
                return Some(cur);
            }
            if bound > 512 {
                return None;
            }
            prev = cur.len();
        }
    }

    /// Is the Weyl group finite (the matrix is of finite type)?
    pub fn is_finite_type(&self) -> bool {
        self.corank() == 0 && self.finite_positive_coroots().is_some()
    }

    /// Human-readable coordinates of a weight, e.g. `2Λ1+Λ2-δ`.
    pub fn format_weight(&self, mu: &Weight) -> String {
        let mut s = String::new();
        let term = |s: &mut String, c: i64, name: String| {
            if c == 0 {
                return;
            }
            if !s.is_empty() && c > 0 {
                s.push('+');
            }
            match c {
                1 => {}
                -1 => s.push('-'),
                _ => s.push_str(&format!("{c}")),
            }
            s.push_str(&name);
        };
        for i in 0..self.rank() {
            term(&mut s, mu.0[i], format!("Λ{}", self.label(i)));
        }
        for k in 0..self.corank() {
            let name = if self.corank() == 1 { String::from("δ") } else { format!("d{}", k + 1) };
            term(&mut s, mu.0[self.rank() + k], name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Positive real coroots as a set, for tests and validation.
    pub fn positive_coroot_set(&self, bound: i64) -> BTreeSet<Vec<i64>> {
        self.positive_coroots_up_to(bound)
            .into_iter()
            .map(|c| c.coords)
            .collect()
    }
}
