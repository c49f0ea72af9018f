//! Root and weight lattices of affine type A.
//!
//! Indices live in `Z/ellZ`. A [`RootVector`] holds the coefficients of the
//! simple roots `alpha_0..alpha_{ell-1}`; a [`WeightVector`] holds the
//! coefficients of the fundamental weights `Lambda_0..Lambda_{ell-1}` plus the
//! coefficient of the null root `delta`. Simple roots are realized as
//! `alpha_j = sum_i C_ij Lambda_i + [j = 0] delta` with `C` the cyclic Cartan
//! matrix, which for `ell = 2` has off-diagonal entries `-2`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on reflections performed by [`dominant_reduce`].
pub const REDUCTION_CAP: usize = 1_000_000;

/// How the residue of a node `(a, b, c)` is read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ResidueConvention {
    /// `a - b + s_c`, with `a` the column and `b` the row.
    #[default]
    Content,
    /// `b - a + s_c`. Only used to demonstrate that the verification suite
    /// detects the wrong convention.
    Transposed,
}

/// The pair `(ell, r)`: order of the cyclic group and level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Context {
    ell: usize,
    r: usize,
    convention: ResidueConvention,
}

impl Context {
    pub fn new(ell: usize, r: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidContext(format!("ell must be at least 2, got {ell}")));
        }
        if r < 1 {
            return Err(Error::InvalidContext(format!("r must be at least 1, got {r}")));
        }
        Ok(Self { ell, r, convention: ResidueConvention::Content })
    }

    pub fn with_convention(self, convention: ResidueConvention) -> Self {
        Self { convention, ..self }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn convention(&self) -> ResidueConvention {
        self.convention
    }

    /// Same `ell` and convention, different level.
    pub fn with_level(&self, r: usize) -> Result<Self> {
        Ok(Self::new(self.ell, r)?.with_convention(self.convention))
    }

    /// Canonical representative of `k` in `[0, ell)`.
    pub fn reduce(&self, k: i64) -> usize {
        k.rem_euclid(self.ell as i64) as usize
    }

    /// Residue of the node in column `a`, row `b` of a component with charge
    /// `charge`.
    pub fn node_residue(&self, a: usize, b: usize, charge: usize) -> usize {
        let (a, b, c) = (a as i64, b as i64, charge as i64);
        match self.convention {
            ResidueConvention::Content => self.reduce(a - b + c),
            ResidueConvention::Transposed => self.reduce(b - a + c),
        }
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.ell {
            return Err(Error::DimensionMismatch { expected: self.ell, got });
        }
        Ok(())
    }
}

/// Element of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(ell: usize) -> Self {
        Self(vec![0; ell])
    }

    /// The simple root `alpha_i`.
    pub fn simple(ell: usize, i: usize) -> Self {
        let mut v = vec![0; ell];
        v[i % ell] = 1;
        Self(v)
    }

    /// The null root: all coefficients one.
    pub fn delta(ell: usize) -> Self {
        Self(vec![1; ell])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn ell(&self) -> usize {
        self.0.len()
    }

    /// Coefficient at a cyclic index.
    pub fn at(&self, i: i64) -> i64 {
        self.0[i.rem_euclid(self.0.len() as i64) as usize]
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|&x| x * k).collect())
    }

    pub fn min_coeff(&self) -> i64 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// `Some(k)` when `self = other + k * delta`.
    pub fn delta_offset(&self, other: &RootVector) -> Option<i64> {
        if self.ell() != other.ell() {
            return None;
        }
        let diff = self - other;
        let k = diff.0[0];
        diff.0.iter().all(|&x| x == k).then_some(k)
    }

    /// `d.d' = sum_i d_i d'_i`.
    pub fn dot(&self, other: &RootVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.ell(), rhs.ell(), "root vectors over different ell");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        assert_eq!(self.ell(), rhs.ell(), "root vectors over different ell");
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        self.scale(-1)
    }
}

/// Element of `h*` in the basis `Lambda_0..Lambda_{ell-1}, delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub lam: Vec<i64>,
    #[serde(default)]
    pub delta: i64,
}

impl WeightVector {
    pub fn new(lam: Vec<i64>, delta: i64) -> Self {
        Self { lam, delta }
    }

    pub fn zero(ell: usize) -> Self {
        Self { lam: vec![0; ell], delta: 0 }
    }

    /// The fundamental weight `Lambda_i`.
    pub fn fundamental(ell: usize, i: usize) -> Self {
        let mut w = Self::zero(ell);
        w.lam[i % ell] = 1;
        w
    }

    /// `k * delta`.
    pub fn null(ell: usize, k: i64) -> Self {
        Self { lam: vec![0; ell], delta: k }
    }

    pub fn ell(&self) -> usize {
        self.lam.len()
    }

    pub fn level(&self) -> i64 {
        self.lam.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.lam.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { lam: self.lam.iter().map(|&x| x * k).collect(), delta: self.delta * k }
    }

    /// Drops the `delta` coefficient.
    pub fn mod_delta(&self) -> Self {
        Self { lam: self.lam.clone(), delta: 0 }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.lam.iter().enumerate() {
            if c == 0 {
                continue;
            }
            write_term(f, c, &format!("L{i}"), first)?;
            first = false;
        }
        if self.delta != 0 {
            write_term(f, self.delta, "d", first)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: i64, name: &str, first: bool) -> fmt::Result {
    let sign = if c < 0 { "-" } else if first { "" } else { "+" };
    match c.abs() {
        1 => write!(f, "{sign}{name}"),
        m => write!(f, "{sign}{m}{name}"),
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.ell(), rhs.ell(), "weights over different ell");
        WeightVector {
            lam: self.lam.iter().zip(&rhs.lam).map(|(a, b)| a + b).collect(),
            delta: self.delta + rhs.delta,
        }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.ell(), rhs.ell(), "weights over different ell");
        WeightVector {
            lam: self.lam.iter().zip(&rhs.lam).map(|(a, b)| a - b).collect(),
            delta: self.delta - rhs.delta,
        }
    }
}

/// A multicharge `s in (Z/ellZ)^r`, stored as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicharge(Vec<usize>);

impl Multicharge {
    /// Reduces arbitrary integers modulo `ell`.
    pub fn new(ctx: &Context, charges: &[i64]) -> Result<Self> {
        if charges.len() != ctx.r {
            return Err(Error::ComponentCount { expected: ctx.r, got: charges.len() });
        }
        Ok(Self(charges.iter().map(|&c| ctx.reduce(c)).collect()))
    }

    pub fn zero(ctx: &Context) -> Self {
        Self(vec![0; ctx.r])
    }

    pub fn residues(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, j: usize) -> usize {
        self.0[j]
    }

    /// Canonical integer lifts in `[0, ell)`.
    pub fn lifts(&self) -> Vec<i64> {
        self.0.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `<x, y> = sum_i x_i (2 y_i - y_{i-1} - y_{i+1})`.
pub fn cartan_pair(ctx: &Context, x: &RootVector, y: &RootVector) -> Result<i64> {
    ctx.check_len(x.ell())?;
    ctx.check_len(y.ell())?;
    Ok(cartan_pair_unchecked(x, y))
}

fn cartan_pair_unchecked(x: &RootVector, y: &RootVector) -> i64 {
    (0..x.ell() as i64)
        .map(|i| x.at(i) * (2 * y.at(i) - y.at(i - 1) - y.at(i + 1)))
        .sum()
}

/// `|x| = sum_i x_i`.
pub fn root_size(x: &RootVector) -> i64 {
    x.coeffs().iter().sum()
}

/// Image of a root in the weight basis.
pub fn root_as_weight(ctx: &Context, x: &RootVector) -> WeightVector {
    assert_eq!(x.ell(), ctx.ell, "root vector length must equal ell");
    let lam = (0..ctx.ell as i64)
        .map(|i| 2 * x.at(i) - x.at(i - 1) - x.at(i + 1))
        .collect();
    WeightVector { lam, delta: x.at(0) }
}

/// `(Lambda^s, w^s)`: the dominant weight of a multicharge and its residue
/// multiplicities.
pub fn charge_data(ctx: &Context, s: &Multicharge) -> (WeightVector, RootVector) {
    let mut w = vec![0i64; ctx.ell];
    for &c in s.residues() {
        w[c] += 1;
    }
    (WeightVector::new(w.clone(), 0), RootVector::new(w))
}

/// The simple reflection `s_i * mu = mu - <mu, alpha_i^vee> alpha_i`.
pub fn reflect(ctx: &Context, mu: &WeightVector, i: usize) -> WeightVector {
    let i = i % ctx.ell;
    let coeff = mu.lam[i];
    if coeff == 0 {
        return mu.clone();
    }
    let alpha = root_as_weight(ctx, &RootVector::simple(ctx.ell, i));
    mu - &alpha.scale(coeff)
}

/// Smallest index carrying a negative `Lambda` coefficient.
fn first_negative(mu: &WeightVector) -> Option<usize> {
    mu.lam.iter().position(|&x| x < 0)
}

/// Conjugates `mu` into the dominant chamber, always reflecting at the
/// smallest negative index. Returns the dominant weight and the word of
/// reflections in application order.
pub fn dominant_reduce(ctx: &Context, mu: &WeightVector) -> Result<(WeightVector, Vec<usize>)> {
    let level = mu.level();
    if level <= 0 {
        return Err(Error::NonPositiveLevel(level));
    }
    let mut current = mu.clone();
    let mut word = Vec::new();
    while let Some(i) = first_negative(&current) {
        if word.len() >= REDUCTION_CAP {
            return Err(Error::IterationCap(REDUCTION_CAP));
        }
        current = reflect(ctx, &current, i);
        word.push(i);
    }
    Ok((current, word))
}

/// Applies a reflection word (first letter first).
pub fn apply_word(ctx: &Context, mu: &WeightVector, word: &[usize]) -> WeightVector {
    word.iter().fold(mu.clone(), |acc, &i| reflect(ctx, &acc, i))
}

/// The block invariants attached to a root `d`: `alpha_d`, `k_d` and the
/// maximal dominant weight `Lambda^+_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInvariants {
    pub alpha: RootVector,
    pub k: i64,
    pub lambda_plus: WeightVector,
    /// Reflection word taking `Lambda^s - d` to `Lambda^+ - k delta`.
    pub word: Vec<usize>,
}

/// Computes `(alpha_d, k_d, Lambda^+_d)`, or `None` when `Lambda^s - d` is
/// not a weight of `L(Lambda^s)`.
///
/// The reduction tracks `c`, the root coordinates of `Lambda^s - mu`; a
/// reflection at `i` only changes `c_i`, to `c_{i-1} + c_{i+1} - c_i + w_i`.
/// `Lambda^s - d` is a weight iff the final `c` is non-negative, and `k` is
/// then `min_i c_i` since `Lambda^+` is maximal exactly when some coordinate
/// of `alpha` vanishes.
pub fn block_invariants(ctx: &Context, d: &RootVector, s: &Multicharge) -> Option<BlockInvariants> {
    assert_eq!(d.ell(), ctx.ell, "root vector length must equal ell");
    let (lambda_s, w) = charge_data(ctx, s);
    let mut c = d.clone();
    let mut word = Vec::new();
    loop {
        let mu = &lambda_s - &root_as_weight(ctx, &c);
        match first_negative(&mu) {
            None => break,
            Some(i) => {
                assert!(word.len() < REDUCTION_CAP, "dominance reduction did not terminate");
                c = dot_reflect_with(ctx, i, &c, &w);
                word.push(i);
            }
        }
    }
    if !c.is_nonnegative() {
        return None;
    }
    let k = c.min_coeff();
    let alpha = &c - &RootVector::delta(ctx.ell).scale(k);
    let lambda_plus = (&lambda_s - &root_as_weight(ctx, &alpha)).mod_delta();
    Some(BlockInvariants { alpha, k, lambda_plus, word })
}

fn dot_reflect_with(ctx: &Context, i: usize, d: &RootVector, w: &RootVector) -> RootVector {
    let i = i % ctx.ell;
    let ii = i as i64;
    let mut out = d.clone();
    out.0[i] = d.at(ii - 1) + d.at(ii + 1) - d.at(ii) + w.coeffs()[i];
    out
}

/// The shifted action `s_i . d = Lambda^s - s_i * (Lambda^s - d)` in root
/// coordinates.
pub fn dot_reflect(ctx: &Context, i: usize, d: &RootVector, s: &Multicharge) -> RootVector {
    let (_, w) = charge_data(ctx, s);
    dot_reflect_with(ctx, i, d, &w)
}

/// `c_Gamma(d) = sum_k <d, alpha_k> Lambda_k`.
pub fn c_gamma(ctx: &Context, d: &RootVector) -> WeightVector {
    root_as_weight(ctx, d).mod_delta()
}

/// Equality modulo `Z delta`, i.e. of the `Lambda` coordinates.
pub fn congruent_mod_delta(mu: &WeightVector, nu: &WeightVector) -> bool {
    mu.lam == nu.lam
}
