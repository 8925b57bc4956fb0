//! Exact root-system data for the simple types A–G.
//!
//! Everything is exact: integer Cartan matrices, `Rational64` for the inverse
//! Cartan matrix, `BigRational` inside the Weyl dimension product. No floating
//! point anywhere.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * Simple roots are numbered in the Bourbaki order.
//! * `cartan[i][j]` is `<alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)`,
//!   so the rows of the Cartan matrix are the simple roots written in the
//!   fundamental-weight basis, and `C^{-1}` expresses the fundamental weights
//!   in terms of the simple roots.
//! * The invariant bilinear form is normalised so long roots have squared
//!   length 2. Internally the form is scaled by 6 so that every pairing used
//!   by the Freudenthal recursion is an integer.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The series of a simple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// Identity of a simple simply-connected complex algebraic group.
///
/// `new` canonicalises the degenerate inputs `C1 -> A1` and `D3 -> A3`.
/// `B1` is accepted and kept as written so that partition-level operations on
/// so(3) classes stay meaningful; its root datum coincides with `A1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupType {
    series: Series,
    rank: usize,
}

impl GroupType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let err = || Error::UnsupportedRank {
            series: series.letter(),
            rank,
        };
        match series {
            Series::A if rank >= 1 => Ok(Self { series, rank }),
            Series::B if rank >= 1 => Ok(Self { series, rank }),
            Series::C if rank == 1 => Ok(Self {
                series: Series::A,
                rank: 1,
            }),
            Series::C if rank >= 2 => Ok(Self { series, rank }),
            Series::D if rank == 3 => Ok(Self {
                series: Series::A,
                rank: 3,
            }),
            Series::D if rank >= 4 => Ok(Self { series, rank }),
            Series::E if (6..=8).contains(&rank) => Ok(Self { series, rank }),
            Series::F if rank == 4 => Ok(Self { series, rank }),
            Series::G if rank == 2 => Ok(Self { series, rank }),
            _ => Err(err()),
        }
    }

    /// Parse names such as `B6`, `e7`, `G2`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(|| Error::GroupParse(name.into()))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(Error::GroupParse(name.into())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::GroupParse(name.into()))?;
        GroupType::new(series, rank)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.series, Series::A | Series::B | Series::C | Series::D)
    }

    pub fn is_exceptional(&self) -> bool {
        !self.is_classical()
    }

    /// Complex dimension of the group.
    pub fn dim(&self) -> u64 {
        let r = self.rank as u64;
        match self.series {
            Series::A => r * (r + 2),
            Series::B | Series::C => r * (2 * r + 1),
            Series::D => r * (2 * r - 1),
            Series::E => match self.rank {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Series::F => 52,
            Series::G => 14,
        }
    }

    /// Size of the natural (vector) module parametrising unipotent classes:
    /// partitions of this number label the classes of a classical group.
    pub fn natural_degree(&self) -> Option<usize> {
        match self.series {
            Series::A => Some(self.rank + 1),
            Series::B => Some(2 * self.rank + 1),
            Series::C | Series::D => Some(2 * self.rank),
            _ => None,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Basis tags for [`WeightVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    SimpleRoot,
    FundamentalWeight,
    Euclidean,
}

/// A weight (or coweight-evaluation vector) with an explicit basis tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: Vec<Rational64>,
    pub basis: Basis,
}

impl WeightVector {
    pub fn from_integers(coords: &[i64], basis: Basis) -> Self {
        Self {
            coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect(),
            basis,
        }
    }
}

/// Exact root data of a simple group.
#[derive(Debug, Clone)]
pub struct RootSystem {
    group: GroupType,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational64>>,
    /// 3 * (alpha_i, alpha_i) with long roots of squared length 2.
    norm3: Vec<i64>,
    /// Positive roots in simple-root coordinates, ordered by height.
    positive_roots: Vec<Vec<i64>>,
    /// Fundamental-weight coordinates of each positive root.
    positive_roots_fw: Vec<Vec<i64>>,
    fundamental_degrees: Vec<u64>,
    dual_coxeter: u64,
    fundamental_rep_dims: Vec<u64>,
}

/// Build the full root datum of `g` (Bourbaki numbering).
pub fn build_root_system(g: GroupType) -> Result<RootSystem> {
    RootSystem::new(g)
}

impl RootSystem {
    pub fn new(group: GroupType) -> Result<Self> {
        let r = group.rank();
        // B1 = Spin(3) carries the A1 root datum.
        let data_series = if group.series() == Series::B && r == 1 {
            Series::A
        } else {
            group.series()
        };

        let (edges, norm3) = diagram_data(data_series, r);
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            cartan[i][i] = 2;
        }
        for &(i, j) in &edges {
            // bonded simple roots satisfy (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2)/2
            let m = norm3[i].max(norm3[j]);
            cartan[i][j] = -m / norm3[j];
            cartan[j][i] = -m / norm3[i];
        }

        let inverse_cartan = invert_rational(&cartan)?;
        let positive_roots = generate_positive_roots(&cartan);
        let positive_roots_fw: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|n| root_to_fw(&cartan, n))
            .collect();

        let fundamental_degrees = fundamental_degrees(data_series, r);
        let dim_from_degrees: u64 = fundamental_degrees.iter().map(|e| 2 * e - 1).sum();
        assert_eq!(dim_from_degrees, group.dim(), "degree/dimension mismatch");
        assert_eq!(
            positive_roots.len() as u64,
            (group.dim() - r as u64) / 2,
            "positive root count mismatch for {group}"
        );

        let dual_coxeter = dual_coxeter(data_series, r);

        let mut rs = Self {
            group,
            cartan,
            inverse_cartan,
            norm3,
            positive_roots,
            positive_roots_fw,
            fundamental_degrees,
            dual_coxeter,
            fundamental_rep_dims: Vec::new(),
        };
        let mut dims = Vec::with_capacity(r);
        for i in 0..r {
            let mut hw = vec![0i64; r];
            hw[i] = 1;
            dims.push(rs.weyl_dimension(&hw)?);
        }
        rs.fundamental_rep_dims = dims;
        Ok(rs)
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational64>] {
        &self.inverse_cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn fundamental_degrees(&self) -> &[u64] {
        &self.fundamental_degrees
    }

    pub fn dual_coxeter(&self) -> u64 {
        self.dual_coxeter
    }

    pub fn fundamental_rep_dims(&self) -> &[u64] {
        &self.fundamental_rep_dims
    }

    /// 3*(alpha_i, alpha_i) for each simple root; long roots give 6.
    pub fn norm3(&self) -> &[i64] {
        &self.norm3
    }

    /// The highest root in simple-root coordinates.
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Apply `C^{-1}` to an integer vector, exactly.
    pub fn inverse_cartan_apply(&self, v: &[i64]) -> Result<Vec<Rational64>> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(self
            .inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, &b)| a * Rational64::from_integer(b))
                    .sum()
            })
            .collect())
    }

    /// Fundamental-weight coordinates of a vector given in root coordinates.
    pub fn root_to_fw(&self, n: &[i64]) -> Vec<i64> {
        root_to_fw(&self.cartan, n)
    }

    /// 6*(mu, nu) where `m` holds the fundamental-weight coordinates of `mu`
    /// and `n` the simple-root coordinates of `nu`.
    pub fn pair6(&self, m: &[i64], n: &[i64]) -> i64 {
        m.iter()
            .zip(n)
            .zip(&self.norm3)
            .map(|((&mi, &ni), &w)| mi * ni * w)
            .sum()
    }

    /// In-place simple reflection on fundamental-weight coordinates.
    pub fn reflect_fw(&self, m: &mut [i64], i: usize) {
        let mi = m[i];
        for (k, entry) in m.iter_mut().enumerate() {
            *entry -= mi * self.cartan[i][k];
        }
    }

    /// Dominant representative of the Weyl orbit of `m` (fundamental-weight coordinates).
    pub fn dominantize_fw(&self, m: &[i64]) -> Vec<i64> {
        let mut m = m.to_vec();
        loop {
            match m.iter().position(|&x| x < 0) {
                Some(i) => self.reflect_fw(&mut m, i),
                None => return m,
            }
        }
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dimension(&self, hw: &[i64]) -> Result<u64> {
        self.check_dominant(hw)?;
        let lam_rho: Vec<i64> = hw.iter().map(|&x| x + 1).collect();
        let rho: Vec<i64> = vec![1; self.rank()];
        let mut acc = BigRational::one();
        for alpha in &self.positive_roots {
            let num = BigInt::from(self.pair6(&lam_rho, alpha));
            let den = BigInt::from(self.pair6(&rho, alpha));
            acc *= BigRational::new(num, den);
        }
        assert!(acc.is_integer(), "Weyl dimension must be an integer");
        acc.to_integer()
            .to_u64()
            .ok_or_else(|| Error::Unsupported("representation dimension exceeds u64".into()))
    }

    fn check_dominant(&self, hw: &[i64]) -> Result<()> {
        if hw.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: hw.len(),
            });
        }
        if hw.iter().any(|&x| x < 0) {
            return Err(Error::NonDominantWeight(format!("{hw:?}")));
        }
        Ok(())
    }

    /// All weights of the irreducible module `V(hw)` with multiplicities,
    /// keyed by fundamental-weight coordinates (Freudenthal recursion on the
    /// dominant cone, extended over each Weyl orbit).
    pub fn weight_multiplicities(&self, hw: &[i64]) -> Result<BTreeMap<Vec<i64>, i64>> {
        self.check_dominant(hw)?;
        let dominant = self.dominant_weight_multiplicities(hw)?;
        let mut out = BTreeMap::new();
        for (m, mult) in &dominant {
            if *mult == 0 {
                continue;
            }
            for w in self.weyl_orbit(m) {
                out.insert(w, *mult);
            }
        }
        Ok(out)
    }

    /// Multiplicities of the dominant weights of `V(hw)`, keyed by
    /// fundamental-weight coordinates. Weights of multiplicity zero
    /// (dominant lattice points below `hw` that do not occur) are omitted.
    pub fn dominant_weight_multiplicities(
        &self,
        hw: &[i64],
    ) -> Result<HashMap<Vec<i64>, i64>> {
        self.check_dominant(hw)?;
        let r = self.rank();

        // Dominant mu <= hw satisfy c = (C^T)^{-1}(hw - mu) >= 0 componentwise,
        // and c <= (C^T)^{-1} hw because the inverse Cartan matrix is positive.
        let mut bound = vec![0i64; r];
        for j in 0..r {
            let mut s = Rational64::zero();
            for i in 0..r {
                s += self.inverse_cartan[i][j] * Rational64::from_integer(hw[i]);
            }
            bound[j] = s.floor().to_integer();
        }

        // Enumerate the box; keep lattice points with hw - C^T c dominant.
        // `candidates` maps fw-coordinates to the root-coordinate offset c.
        let mut candidates: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut c = vec![0i64; r];
        'outer: loop {
            let mut m = hw.to_vec();
            for j in 0..r {
                if c[j] != 0 {
                    for k in 0..r {
                        m[k] -= c[j] * self.cartan[j][k];
                    }
                }
            }
            if m.iter().all(|&x| x >= 0) {
                candidates.push((m, c.clone()));
            }
            // odometer
            for j in 0..=r {
                if j == r {
                    break 'outer;
                }
                if c[j] < bound[j] {
                    c[j] += 1;
                    continue 'outer;
                }
                c[j] = 0;
            }
        }

        // Height-ascending order guarantees every Freudenthal lookup hits an
        // already-computed multiplicity.
        candidates.sort_by_key(|(_, c)| c.iter().sum::<i64>());

        let offsets: HashMap<Vec<i64>, Vec<i64>> = candidates
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();

        let two_rho: Vec<i64> = vec![2; r];
        let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
        for (m, c) in &candidates {
            if c.iter().all(|&x| x == 0) {
                mult.insert(m.clone(), 1);
                continue;
            }
            // denominator: (hw+rho, hw+rho) - (mu+rho, mu+rho) = (hw+mu+2rho, hw-mu)
            let mut sum_fw: Vec<i64> = hw.iter().zip(m).map(|(&a, &b)| a + b).collect();
            for (s, t) in sum_fw.iter_mut().zip(&two_rho) {
                *s += t;
            }
            let den = self.pair6(&sum_fw, c) as i128;
            assert!(den > 0, "Freudenthal denominator must be positive");

            let mut num: i128 = 0;
            for (alpha, alpha_fw) in self.positive_roots.iter().zip(&self.positive_roots_fw) {
                let mut k = 1i64;
                loop {
                    // mu + k*alpha is a weight only if hw - (mu + k*alpha) stays in Q+.
                    if c.iter().zip(alpha).any(|(&ci, &ai)| ci - k * ai < 0) {
                        break;
                    }
                    let shifted: Vec<i64> =
                        m.iter().zip(alpha_fw).map(|(&a, &b)| a + k * b).collect();
                    let dom = self.dominantize_fw(&shifted);
                    if let Some(&mu_mult) = mult.get(&dom) {
                        if mu_mult > 0 {
                            num += 2 * (self.pair6(&shifted, alpha) as i128) * (mu_mult as i128);
                        }
                    } else if !offsets.contains_key(&dom) {
                        // not a lattice point of the module at all
                    }
                    k += 1;
                }
            }
            debug_assert!(num % den == 0, "Freudenthal division must be exact");
            let value = num / den;
            if value != 0 {
                mult.insert(m.clone(), value as i64);
            }
        }
        mult.retain(|_, v| *v > 0);
        Ok(mult)
    }

    /// The full Weyl orbit of a weight given in fundamental-weight coordinates.
    pub fn weyl_orbit(&self, m: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut stack = vec![m.to_vec()];
        seen.insert(m.to_vec());
        while let Some(w) = stack.pop() {
            for i in 0..self.rank() {
                if w[i] != 0 {
                    let mut w2 = w.clone();
                    self.reflect_fw(&mut w2, i);
                    if seen.insert(w2.clone()) {
                        stack.push(w2);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Convert a weight vector between bases. Euclidean coordinates are
    /// supported for the classical series only.
    pub fn convert(&self, v: &WeightVector, to: Basis) -> Result<WeightVector> {
        if v.basis == to {
            return Ok(v.clone());
        }
        // normalise via simple-root coordinates
        let root_coords = match v.basis {
            Basis::SimpleRoot => v.coords.clone(),
            Basis::FundamentalWeight => {
                // m = C^T n  =>  n = (C^T)^{-1} m = (C^{-1})^T m
                let r = self.rank();
                if v.coords.len() != r {
                    return Err(Error::DimensionMismatch {
                        expected: r,
                        got: v.coords.len(),
                    });
                }
                (0..r)
                    .map(|j| (0..r).map(|i| self.inverse_cartan[i][j] * v.coords[i]).sum())
                    .collect()
            }
            Basis::Euclidean => self.euclidean_to_root(&v.coords)?,
        };
        let coords = match to {
            Basis::SimpleRoot => root_coords,
            Basis::FundamentalWeight => {
                let r = self.rank();
                (0..r)
                    .map(|k| {
                        (0..r)
                            .map(|j| {
                                root_coords[j] * Rational64::from_integer(self.cartan[j][k])
                            })
                            .sum()
                    })
                    .collect()
            }
            Basis::Euclidean => self.root_to_euclidean(&root_coords)?,
        };
        Ok(WeightVector { coords, basis: to })
    }

    fn root_to_euclidean(&self, n: &[Rational64]) -> Result<Vec<Rational64>> {
        let r = self.rank();
        if n.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: n.len(),
            });
        }
        let at = |j: usize| -> Rational64 {
            if j == 0 {
                Rational64::zero()
            } else {
                n[j - 1]
            }
        };
        match self.group.series() {
            Series::A => {
                let mut e = Vec::with_capacity(r + 1);
                for j in 1..=r {
                    e.push(at(j) - at(j - 1));
                }
                e.push(-at(r));
                Ok(e)
            }
            Series::B => {
                let mut e = Vec::with_capacity(r);
                for j in 1..=r {
                    e.push(at(j) - at(j - 1));
                }
                Ok(e)
            }
            Series::C => {
                let mut e = Vec::with_capacity(r);
                for j in 1..r {
                    e.push(at(j) - at(j - 1));
                }
                e.push(at(r) + at(r) - at(r - 1));
                Ok(e)
            }
            Series::D => {
                let mut e = Vec::with_capacity(r);
                for j in 1..=r - 2 {
                    e.push(at(j) - at(j - 1));
                }
                e.push(at(r - 1) + at(r) - at(r - 2));
                e.push(at(r) - at(r - 1));
                Ok(e)
            }
            _ => Err(Error::Unsupported(
                "euclidean coordinates are defined for classical types only".into(),
            )),
        }
    }

    fn euclidean_to_root(&self, e: &[Rational64]) -> Result<Vec<Rational64>> {
        let r = self.rank();
        let two = Rational64::from_integer(2);
        match self.group.series() {
            Series::A => {
                if e.len() != r + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: r + 1,
                        got: e.len(),
                    });
                }
                let total: Rational64 = e.iter().sum();
                if !total.is_zero() {
                    return Err(Error::Unsupported(
                        "type A euclidean coordinates must sum to zero".into(),
                    ));
                }
                let mut n = Vec::with_capacity(r);
                let mut acc = Rational64::zero();
                for item in e.iter().take(r) {
                    acc += *item;
                    n.push(acc);
                }
                Ok(n)
            }
            Series::B | Series::C | Series::D => {
                if e.len() != r {
                    return Err(Error::DimensionMismatch {
                        expected: r,
                        got: e.len(),
                    });
                }
                let mut n = vec![Rational64::zero(); r];
                let mut acc = Rational64::zero();
                match self.group.series() {
                    Series::B => {
                        for j in 0..r {
                            acc += e[j];
                            n[j] = acc;
                        }
                    }
                    Series::C => {
                        for j in 0..r - 1 {
                            acc += e[j];
                            n[j] = acc;
                        }
                        n[r - 1] = (n[r - 2] + e[r - 1]) / two;
                    }
                    Series::D => {
                        for j in 0..r - 2 {
                            acc += e[j];
                            n[j] = acc;
                        }
                        let prev = if r >= 3 { n[r - 3] } else { Rational64::zero() };
                        n[r - 2] = (e[r - 2] - e[r - 1] + prev) / two;
                        n[r - 1] = (e[r - 2] + e[r - 1] + prev) / two;
                    }
                    _ => unreachable!(),
                }
                Ok(n)
            }
            _ => Err(Error::Unsupported(
                "euclidean coordinates are defined for classical types only".into(),
            )),
        }
    }
}

fn root_to_fw(cartan: &[Vec<i64>], n: &[i64]) -> Vec<i64> {
    let r = cartan.len();
    (0..r)
        .map(|k| (0..r).map(|j| n[j] * cartan[j][k]).sum())
        .collect()
}

/// Bonds and scaled norms of the Bourbaki diagram.
fn diagram_data(series: Series, r: usize) -> (Vec<(usize, usize)>, Vec<i64>) {
    let chain = |r: usize| (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match series {
        Series::A => (chain(r), vec![6; r]),
        Series::B => {
            let mut norm3 = vec![6; r];
            norm3[r - 1] = 3;
            (chain(r), norm3)
        }
        Series::C => {
            let mut norm3 = vec![3; r];
            norm3[r - 1] = 6;
            (chain(r), norm3)
        }
        Series::D => {
            let mut edges = chain(r - 1);
            edges.push((r - 3, r - 1));
            (edges, vec![6; r])
        }
        Series::E => {
            // 1-3-4-5-6(-7(-8)) with 2 attached to 4
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..r - 1 {
                edges.push((i, i + 1));
            }
            (edges, vec![6; r])
        }
        Series::F => (chain(4), vec![6, 6, 3, 3]),
        Series::G => (chain(2), vec![2, 6]),
    }
}

fn fundamental_degrees(series: Series, r: usize) -> Vec<u64> {
    let mut deg: Vec<u64> = match series {
        Series::A => (2..=r as u64 + 1).collect(),
        Series::B | Series::C => (1..=r as u64).map(|i| 2 * i).collect(),
        Series::D => {
            let mut v: Vec<u64> = (1..r as u64).map(|i| 2 * i).collect();
            v.push(r as u64);
            v
        }
        Series::E => match r {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    };
    deg.sort_unstable();
    deg
}

fn dual_coxeter(series: Series, r: usize) -> u64 {
    match series {
        Series::A => r as u64 + 1,
        Series::B => 2 * r as u64 - 1,
        Series::C => r as u64 + 1,
        Series::D => 2 * r as u64 - 2,
        Series::E => match r {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Series::F => 9,
        Series::G => 4,
    }
}

/// Positive roots by the standard closure algorithm on root strings.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0i64; r];
            v[i] = 1;
            v
        })
        .collect();
    for root in &layer {
        seen.insert(root.clone());
        roots.push(root.clone());
    }
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..r {
                // q = how far the alpha_i-string extends below beta
                let mut q = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !seen.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                let pairing: i64 = (0..r).map(|k| beta[k] * cartan[k][i]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots.sort_by_key(|n| (n.iter().sum::<i64>(), n.clone()));
    roots
}

/// Exact inverse of an integer matrix via Gauss-Jordan elimination.
pub(crate) fn invert_rational_matrix(m: &[Vec<i64>]) -> Result<Vec<Vec<Rational64>>> {
    invert_rational(m)
}

fn invert_rational(m: &[Vec<i64>]) -> Result<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .ok_or_else(|| Error::CorruptData("singular Cartan matrix".into()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for j in 0..n {
                    let (aj, ij) = (a[col][j], inv[col][j]);
                    a[row][j] -= f * aj;
                    inv[row][j] -= f * ij;
                }
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(GroupType::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn canonical_low_rank_data() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.fundamental_degrees(), &[2]);
        assert_eq!(a1.dual_coxeter(), 2);
        assert_eq!(a1.fundamental_rep_dims(), &[2]);
    }

    #[test]
    fn degenerate_inputs_canonicalise() {
        assert_eq!(GroupType::new(Series::C, 1).unwrap(), GroupType::parse("A1").unwrap());
        assert_eq!(GroupType::new(Series::D, 3).unwrap(), GroupType::parse("A3").unwrap());
        assert!(GroupType::new(Series::D, 2).is_err());
        assert!(GroupType::new(Series::E, 9).is_err());
        // B1 = Spin(3) is accepted; its root datum matches A1.
        let b1 = rs("B1");
        assert_eq!(b1.fundamental_degrees(), &[2]);
        assert_eq!(b1.norm3(), &[6]);
    }

    #[test]
    fn degrees_match_paper_groups() {
        assert_eq!(rs("B6").fundamental_degrees(), &[2, 4, 6, 8, 10, 12]);
        assert_eq!(rs("C6").fundamental_degrees(), &[2, 4, 6, 8, 10, 12]);
        assert_eq!(rs("E6").fundamental_degrees(), &[2, 5, 6, 8, 9, 12]);
        assert_eq!(GroupType::parse("E6").unwrap().dim(), 78);
        assert_eq!(rs("D4").fundamental_degrees(), &[2, 4, 4, 6]);
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("B2", 4),
            ("G2", 6),
            ("D4", 12),
            ("B6", 36),
            ("C6", 36),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(rs(name).positive_roots().len(), count, "{name}");
        }
    }

    #[test]
    fn cartan_inverse_is_exact() {
        for name in ["A5", "B6", "C6", "D5", "E7", "F4", "G2"] {
            let r = rs(name);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let mut s = Rational64::zero();
                    for k in 0..n {
                        s += Rational64::from_integer(r.cartan()[i][k]) * r.inverse_cartan()[k][j];
                    }
                    let expected = if i == j { Rational64::one() } else { Rational64::zero() };
                    assert_eq!(s, expected, "{name} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn determinant_equals_centre_order() {
        // det C as the product of pivots == order of the centre
        fn det(c: &[Vec<i64>]) -> i64 {
            let n = c.len();
            let mut a: Vec<Vec<Rational64>> = c
                .iter()
                .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
                .collect();
            let mut d = Rational64::one();
            for col in 0..n {
                let p = (col..n).find(|&r| !a[r][col].is_zero()).unwrap();
                if p != col {
                    a.swap(col, p);
                    d = -d;
                }
                d *= a[col][col];
                for r in col + 1..n {
                    let f = a[r][col] / a[col][col];
                    for j in col..n {
                        let v = a[col][j];
                        a[r][j] -= f * v;
                    }
                }
            }
            assert!(d.is_integer());
            d.to_integer()
        }
        for (name, centre) in [
            ("A4", 5),
            ("B6", 2),
            ("C6", 2),
            ("D6", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
        ] {
            assert_eq!(det(rs(name).cartan()), centre, "{name}");
        }
    }

    #[test]
    fn dual_coxeter_matches_highest_root() {
        // h^vee = 1 + sum m_i * norm3_i / 6 over the highest root coefficients
        for name in ["A4", "B6", "C6", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            let theta = r.highest_root();
            let six_sum: i64 = theta.iter().zip(r.norm3()).map(|(&m, &w)| m * w).sum();
            assert_eq!(six_sum % 6, 0, "{name}");
            assert_eq!(1 + (six_sum / 6) as u64, r.dual_coxeter(), "{name}");
        }
    }

    #[test]
    fn inverse_cartan_apply_examples() {
        let a1 = rs("A1");
        assert_eq!(
            a1.inverse_cartan_apply(&[2]).unwrap(),
            vec![Rational64::from_integer(1)]
        );
        let a2 = rs("A2");
        assert_eq!(
            a2.inverse_cartan_apply(&[2, 2]).unwrap(),
            vec![Rational64::from_integer(2), Rational64::from_integer(2)]
        );
        let b2 = rs("B2");
        assert_eq!(
            b2.inverse_cartan_apply(&[0, 0]).unwrap(),
            vec![Rational64::zero(), Rational64::zero()]
        );
        assert!(a2.inverse_cartan_apply(&[1]).is_err());
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(rs("A1").weyl_dimension(&[1]).unwrap(), 2);
        assert_eq!(rs("B6").weyl_dimension(&[1, 0, 0, 0, 0, 0]).unwrap(), 13);
        assert_eq!(rs("E6").weyl_dimension(&[0, 1, 0, 0, 0, 0]).unwrap(), 78);
        assert_eq!(rs("G2").fundamental_rep_dims(), &[7, 14]);
        assert_eq!(rs("F4").fundamental_rep_dims(), &[52, 1274, 273, 26]);
        assert_eq!(rs("E6").fundamental_rep_dims(), &[27, 78, 351, 2925, 351, 27]);
        assert_eq!(
            rs("E7").fundamental_rep_dims(),
            &[133, 912, 8645, 365750, 27664, 1539, 56]
        );
        assert_eq!(rs("B6").fundamental_rep_dims(), &[13, 78, 286, 715, 1287, 64]);
        assert_eq!(rs("C6").fundamental_rep_dims(), &[12, 65, 208, 429, 572, 429]);
        assert_eq!(rs("D6").fundamental_rep_dims(), &[12, 66, 220, 495, 32, 32]);
        let e8 = rs("E8");
        assert_eq!(e8.fundamental_rep_dims()[7], 248);
        assert_eq!(e8.fundamental_rep_dims()[0], 3875);
    }

    #[test]
    fn weight_multiplicities_sl2_examples() {
        let a1 = rs("A1");
        let w = a1.weight_multiplicities(&[2]).unwrap();
        let expected: BTreeMap<Vec<i64>, i64> =
            [(vec![2], 1), (vec![0], 1), (vec![-2], 1)].into_iter().collect();
        assert_eq!(w, expected);
        assert!(a1.weight_multiplicities(&[-1]).is_err());
    }

    #[test]
    fn adjoint_zero_weight_multiplicity_is_rank() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let r = rs(name);
            let hw = r.root_to_fw(&r.highest_root().to_vec());
            let mults = r.weight_multiplicities(&hw).unwrap();
            let zero = vec![0i64; r.rank()];
            assert_eq!(mults[&zero] as usize, r.rank(), "{name}");
            let total: i64 = mults.values().sum();
            assert_eq!(total as u64, r.group().dim(), "{name} adjoint dimension");
        }
    }

    #[test]
    fn multiplicity_totals_match_weyl_dimension() {
        // every fundamental weight for each rank <= 6 sample, plus E7 w7 and E8 w8
        for name in ["A2", "B2", "G2", "A4", "C4", "D4", "F4", "B6", "C6", "D6", "A6", "E6"] {
            let r = rs(name);
            for i in 0..r.rank() {
                let mut hw = vec![0i64; r.rank()];
                hw[i] = 1;
                let total: i64 = r.weight_multiplicities(&hw).unwrap().values().sum();
                assert_eq!(total as u64, r.fundamental_rep_dims()[i], "{name} w{}", i + 1);
            }
        }
        let e7 = rs("E7");
        let total: i64 = e7
            .weight_multiplicities(&[0, 0, 0, 0, 0, 0, 1])
            .unwrap()
            .values()
            .sum();
        assert_eq!(total, 56);
        let e8 = rs("E8");
        let total: i64 = e8
            .weight_multiplicities(&[0, 0, 0, 0, 0, 0, 0, 1])
            .unwrap()
            .values()
            .sum();
        assert_eq!(total, 248);
    }

    #[test]
    fn e6_27_dimensional_module_is_multiplicity_free() {
        let e6 = rs("E6");
        let mults = e6.weight_multiplicities(&[1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(mults.len(), 27);
        assert!(mults.values().all(|&m| m == 1));
    }

    #[test]
    fn multiplicities_constant_on_weyl_orbits() {
        for name in ["B2", "G2", "A3"] {
            let r = rs(name);
            let hw = r.root_to_fw(&r.highest_root().to_vec());
            let mults = r.weight_multiplicities(&hw).unwrap();
            for (m, &mult) in &mults {
                for w in r.weyl_orbit(m) {
                    assert_eq!(mults[&w], mult, "{name}");
                }
            }
        }
    }

    #[test]
    fn basis_conversions_round_trip() {
        for name in ["A3", "B4", "C4", "D5"] {
            let r = rs(name);
            let v = WeightVector::from_integers(&vec![1; r.rank()], Basis::FundamentalWeight);
            for basis in [Basis::SimpleRoot, Basis::Euclidean] {
                let there = r.convert(&v, basis).unwrap();
                let back = r.convert(&there, Basis::FundamentalWeight).unwrap();
                assert_eq!(back.coords, v.coords, "{name} via {basis:?}");
            }
        }
        // exceptional types reject euclidean coordinates
        let g2 = rs("G2");
        let v = WeightVector::from_integers(&[1, 0], Basis::FundamentalWeight);
        assert!(g2.convert(&v, Basis::Euclidean).is_err());
    }
}
