//! Homotopy invariants of the quotient space attached to a unipotent class:
//! dimension, quite-even status (two independent criteria), the low homotopy
//! groups, the pi_4..pi_6 table for types B and C, rational sphere
//! decompositions, and the intermediate-quotient image criteria.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{Partition, UnipotentClass, WeightedDiagram};
use crate::root_data::{GroupType, RootSystem, Series};
use crate::sl2restrict::dynkin_index_with;

/// Symbolic description of a finitely generated abelian group, as far as the
/// long exact sequence determines it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiniteAbelianGroup {
    Trivial,
    Cyclic(u64),
    Sum(Vec<u64>),
    /// Order four, extension not determined: Z/2 + Z/2 or Z/4.
    Order4Undetermined,
    InfiniteCyclic,
}

impl FiniteAbelianGroup {
    /// Cyclic group of order n; n = 1 normalises to the trivial group and
    /// n = 0 to the infinite cyclic one.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => FiniteAbelianGroup::InfiniteCyclic,
            1 => FiniteAbelianGroup::Trivial,
            n => FiniteAbelianGroup::Cyclic(n),
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteAbelianGroup::Trivial => write!(f, "0"),
            FiniteAbelianGroup::Cyclic(n) => write!(f, "Z/{n}"),
            FiniteAbelianGroup::Sum(parts) => {
                for (i, n) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "Z/{n}")?;
                }
                Ok(())
            }
            FiniteAbelianGroup::Order4Undetermined => write!(f, "Z/2+Z/2 or Z/4"),
            FiniteAbelianGroup::InfiniteCyclic => write!(f, "Z"),
        }
    }
}

/// Complex dimension of the quotient by a nontrivial class: dim G - 3.
pub fn dim_x(g: GroupType) -> u64 {
    g.dim() - 3
}

/// All parts of the same parity (the class is even).
pub fn even_partition(p: &Partition) -> bool {
    let parity = p.parts()[0] % 2;
    p.parts().iter().all(|&d| d % 2 == parity)
}

/// Partition criterion for quite even classes: types A and C need all parts
/// odd, types B and D need the product of the parts to be +-1 mod 8.
pub fn quite_even_partition(g: GroupType, p: &Partition) -> Result<bool> {
    if p.is_trivial() {
        return Err(Error::TrivialClass);
    }
    match g.series() {
        Series::A | Series::C => Ok(p.parts().iter().all(|&d| d % 2 == 1)),
        Series::B | Series::D => {
            let product_mod8 = p.parts().iter().fold(1u32, |acc, &d| (acc * (d % 8)) % 8);
            Ok(product_mod8 == 1 || product_mod8 == 7)
        }
        _ => Err(Error::NotClassical(g.to_string())),
    }
}

/// Inverse-Cartan criterion for quite even classes: every entry of
/// `C^{-1} [u]` is an even integer.
pub fn quite_even_cartan(rs: &RootSystem, diagram: &WeightedDiagram) -> Result<bool> {
    if diagram.is_zero() {
        return Err(Error::TrivialClass);
    }
    let applied = rs.inverse_cartan_apply(&diagram.as_i64())?;
    let mut even = true;
    for x in &applied {
        if !x.is_integer() {
            return Err(Error::CorruptData(
                "C^-1 applied to a weighted diagram must be integral".into(),
            ));
        }
        if x.to_integer() % 2 != 0 {
            even = false;
        }
    }
    Ok(even)
}

/// Quite-even status of a class; the trivial class reports false by the
/// convention of the homotopy computations.
pub fn quite_even_class(rs: &RootSystem, c: &UnipotentClass) -> Result<bool> {
    if c.is_trivial() {
        return Ok(false);
    }
    match c.partition() {
        Some(p) => quite_even_partition(c.group(), p),
        None => quite_even_cartan(rs, c.diagram()),
    }
}

/// Common parity of the spin module weights of a type-B class whose parts
/// are all odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinWeightParity {
    AllEven,
    AllOdd,
}

/// Parity via the closed form: writing the parts as 2c+1, the weights are
/// all even iff the sum of c(c+1)/2 is even.
pub fn spin_parity_check(p: &Partition) -> Result<SpinWeightParity> {
    if p.parts().iter().any(|&d| d % 2 == 0) {
        return Err(Error::Unsupported(
            "spin parity is defined for all-odd partitions".into(),
        ));
    }
    let total: u64 = p
        .parts()
        .iter()
        .map(|&d| {
            let c = (d as u64 - 1) / 2;
            c * (c + 1) / 2
        })
        .sum();
    Ok(if total % 2 == 0 {
        SpinWeightParity::AllEven
    } else {
        SpinWeightParity::AllOdd
    })
}

/// pi_1, pi_2, pi_3 of the quotient by a nontrivial class.
pub fn low_homotopy(
    rs: &RootSystem,
    c: &UnipotentClass,
) -> Result<(FiniteAbelianGroup, FiniteAbelianGroup, FiniteAbelianGroup)> {
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let quite_even = quite_even_class(rs, c)?;
    let nu = dynkin_index_with(rs, c)?;
    Ok((
        FiniteAbelianGroup::Trivial,
        if quite_even {
            FiniteAbelianGroup::Cyclic(2)
        } else {
            FiniteAbelianGroup::Trivial
        },
        FiniteAbelianGroup::cyclic(nu),
    ))
}

/// pi_4, pi_5, pi_6 of the quotient, defined for the B and C series. For
/// type C the answer depends only on the parity of the Dynkin index.
pub fn higher_pi_bc(
    series: Series,
    nu: u64,
) -> Result<(FiniteAbelianGroup, FiniteAbelianGroup, FiniteAbelianGroup)> {
    use FiniteAbelianGroup as G;
    match series {
        Series::B => Ok((G::Trivial, G::Cyclic(2), G::Cyclic(2))),
        Series::C => {
            if nu % 2 == 0 {
                Ok((G::Cyclic(2), G::Trivial, G::Cyclic(2)))
            } else {
                Ok((G::Trivial, G::Order4Undetermined, G::Trivial))
            }
        }
        other => Err(Error::WrongSeries {
            expected: 'B',
            got: other.letter(),
        }),
    }
}

/// Dimensions of the spheres in the rational homotopy decomposition:
/// 2e_i - 1 over the fundamental degrees, dropping the first degree for the
/// quotient by a nontrivial class.
pub fn rational_type(rs: &RootSystem, trivial: bool) -> Vec<u64> {
    let skip = usize::from(!trivial);
    rs.fundamental_degrees()
        .iter()
        .skip(skip)
        .map(|&e| 2 * e - 1)
        .collect()
}

/// Intermediate quotients of the simply-connected group, for the image
/// criterion of even, not quite even classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntermediateQuotient {
    /// Type A_{2k-1} modulo the central subgroup of order s (s divides 2k).
    CentralQuotientA { s: u64 },
    /// Type D modulo the kernel of the vector representation.
    SpecialOrthogonal,
    /// Type D of even rank modulo the kernel of a half-spin representation.
    Semispin,
}

/// Whether the image of SL2 in the given intermediate quotient is the
/// adjoint form PSL2. Requires an even, not quite even, nontrivial class.
pub fn quotient_image_psl(c: &UnipotentClass, quotient: IntermediateQuotient) -> Result<bool> {
    let p = c
        .partition()
        .ok_or_else(|| Error::NotClassical(c.to_string()))?;
    if p.is_trivial() {
        return Err(Error::TrivialClass);
    }
    if !even_partition(p) || quite_even_partition(c.group(), p)? {
        return Err(Error::Unsupported(
            "image criterion applies to even, not quite even classes".into(),
        ));
    }
    match quotient {
        IntermediateQuotient::CentralQuotientA { s } => {
            if c.group().series() != Series::A || c.group().rank() % 2 == 0 {
                return Err(Error::WrongSeries {
                    expected: 'A',
                    got: c.group().series().letter(),
                });
            }
            let two_k = c.group().rank() as u64 + 1;
            if s == 0 || two_k % s != 0 {
                return Err(Error::Unsupported(format!("s = {s} does not divide {two_k}")));
            }
            Ok((two_k / s) % 2 == 0)
        }
        IntermediateQuotient::SpecialOrthogonal => {
            if c.group().series() != Series::D {
                return Err(Error::WrongSeries {
                    expected: 'D',
                    got: c.group().series().letter(),
                });
            }
            Ok(p.parts().iter().all(|&d| d % 2 == 1))
        }
        IntermediateQuotient::Semispin => {
            if c.group().series() != Series::D || c.group().rank() % 2 != 0 {
                return Err(Error::WrongSeries {
                    expected: 'D',
                    got: c.group().series().letter(),
                });
            }
            let product_mod8 = p.parts().iter().fold(1u32, |acc, &d| (acc * (d % 8)) % 8);
            Ok(product_mod8 == 1 || product_mod8 == 7)
        }
    }
}

/// The assembled homotopy dossier of one quotient space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomotopyReport {
    pub group: String,
    pub class: String,
    pub dim_x: u64,
    pub trivial_class: bool,
    pub quite_even: bool,
    pub even: bool,
    pub dynkin_index: u64,
    pub pi1: FiniteAbelianGroup,
    pub pi2: FiniteAbelianGroup,
    pub pi3: FiniteAbelianGroup,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi4: Option<FiniteAbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi5: Option<FiniteAbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi6: Option<FiniteAbelianGroup>,
    pub sphere_degrees: Vec<u64>,
    pub weighted_diagram: Vec<u8>,
    pub notes: Vec<String>,
}

/// Compute the full homotopy dossier of the quotient by `c`.
pub fn homotopy_report(rs: &RootSystem, c: &UnipotentClass) -> Result<HomotopyReport> {
    let g = c.group();
    let mut notes = Vec::new();
    if c.is_trivial() {
        notes.push("trivial class: the quotient is the group itself".into());
        return Ok(HomotopyReport {
            group: g.to_string(),
            class: c.name(),
            dim_x: g.dim(),
            trivial_class: true,
            quite_even: false,
            even: true,
            dynkin_index: 0,
            pi1: FiniteAbelianGroup::Trivial,
            pi2: FiniteAbelianGroup::Trivial,
            pi3: FiniteAbelianGroup::InfiniteCyclic,
            pi4: None,
            pi5: None,
            pi6: None,
            sphere_degrees: rational_type(rs, true),
            weighted_diagram: c.diagram().weights().to_vec(),
            notes,
        });
    }
    let (pi1, pi2, pi3) = low_homotopy(rs, c)?;
    let nu = dynkin_index_with(rs, c)?;
    let (pi4, pi5, pi6) = match g.series() {
        Series::B | Series::C if g.rank() >= 2 => {
            let (a, b, c6) = higher_pi_bc(g.series(), nu)?;
            (Some(a), Some(b), Some(c6))
        }
        _ => (None, None, None),
    };
    let qe = quite_even_class(rs, c)?;
    // consistency of the two quite-even criteria, checked on every call
    if let Some(p) = c.partition() {
        let cartan = quite_even_cartan(rs, c.diagram())?;
        if cartan != qe {
            return Err(Error::CorruptData(format!(
                "quite-even criteria disagree for {g} {p}"
            )));
        }
        if g.series() == Series::B && p.parts().iter().all(|&d| d % 2 == 1) {
            let parity = spin_parity_check(p)?;
            if (parity == SpinWeightParity::AllEven) != qe {
                return Err(Error::CorruptData(format!(
                    "spin parity disagrees with the mod-8 product for {g} {p}"
                )));
            }
        }
    }
    Ok(HomotopyReport {
        group: g.to_string(),
        class: c.name(),
        dim_x: dim_x(g),
        trivial_class: false,
        quite_even: qe,
        even: c.diagram().is_even(),
        dynkin_index: nu,
        pi1,
        pi2,
        pi3,
        pi4,
        pi5,
        pi6,
        sphere_degrees: rational_type(rs, false),
        weighted_diagram: c.diagram().weights().to_vec(),
        notes,
    })
}
