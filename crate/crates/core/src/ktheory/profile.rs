//! The K-theory ideal of a quotient space: generators in Z[x] obtained by
//! restricting a polynomial generating set of the representation ring along
//! the class homomorphism and subtracting dimensions, together with the
//! reduced gcd exponents modulo small primes.
//!
//! For classical groups the generators use exterior powers of the natural
//! restriction plus the (semi)spin characters; this set differs from the
//! fundamental representations by a triangular change with unit diagonal, so
//! it generates the same ideal while avoiding weight-multiplicity runs at
//! large rank. The fundamental-representation route stays available (for
//! every type with a workable weight system) as a cross-check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::UnipotentClass;
use crate::root_data::{RootSystem, Series};
use crate::sl2restrict::{
    char_poly, exterior_power, natural_weights, restrict_fundamental, semispin_weights,
    sl2_decompose, spin_weights, to_psl2_variable, CharacterPoly, Side, SignParity,
    WeightMultiset,
};

use super::poly::{IntPoly, PrimePoly};

/// Outcome of reducing the ideal modulo one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeReduction {
    /// The reduced ideal is ((x - d)^a); stores a.
    Exponent(u32),
    /// Every generator vanished modulo the prime; the reduction carries no
    /// information and the closed-form homology lemma does not apply.
    Degenerate,
}

/// The ideal invariant of a quotient space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealProfile {
    /// Which representation ring the generators live in, fixing the
    /// evaluation point d (2 or 3).
    pub side: Side,
    pub generators: Vec<IntPoly>,
    /// Reduced gcd exponents for each prime tried.
    pub per_prime: BTreeMap<u64, PrimeReduction>,
}

impl IdealProfile {
    pub fn eval_point(&self) -> i128 {
        self.side.eval_point()
    }

    pub fn exponent_at(&self, p: u64) -> Option<u32> {
        match self.per_prime.get(&p) {
            Some(PrimeReduction::Exponent(a)) => Some(*a),
            _ => None,
        }
    }
}

fn character_minus_dimension(weights: &WeightMultiset) -> Result<CharacterPoly> {
    let dec = sl2_decompose(weights)?;
    let ch = char_poly(&dec);
    let dim = ch.dimension();
    Ok(CharacterPoly {
        poly: ch.poly.sub(&IntPoly::constant(dim)),
        side: ch.side,
    })
}

fn binomial_i128(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut out = 1i128;
    for i in 0..k {
        out = out * (n - i) as i128 / (i + 1) as i128;
    }
    out
}

fn finish_generators(raw: Vec<CharacterPoly>, quite_even: bool) -> Result<(Side, Vec<IntPoly>)> {
    let mut out = Vec::with_capacity(raw.len());
    let side = if quite_even { Side::PSL2 } else { Side::SL2 };
    for ch in raw {
        // augmentation: every generator vanishes at the SL2 evaluation point
        if ch.dimension() != 0 {
            return Err(Error::CorruptData(format!(
                "generator {} does not vanish at x = {}",
                ch.poly,
                ch.side.eval_point()
            )));
        }
        let ch = if quite_even { to_psl2_variable(&ch)? } else { ch };
        if ch.dimension() != 0 {
            return Err(Error::CorruptData(
                "generator stopped vanishing after the variable change".into(),
            ));
        }
        out.push(ch.poly);
    }
    Ok((side, out))
}

/// Generators of the ideal, with the prime table left empty.
///
/// Classical series: exterior powers of the natural restriction, with the
/// spin (type B) or both semispin (type D) characters in place of the top
/// exterior powers. Exceptional types: restrictions of every fundamental
/// representation (E8's largest fundamental weight systems are beyond a
/// desk-scale run and are reported as unsupported).
pub fn ideal_generators(rs: &RootSystem, c: &UnipotentClass) -> Result<IdealProfile> {
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let g = c.group();
    let quite_even = crate::invariants::quite_even_class(rs, c)?;
    let raw: Vec<CharacterPoly> = if g.is_classical() {
        let p = c.partition().expect("classical class");
        let n = p.n();
        let natural = natural_weights(c)?;
        let r = g.rank();
        let exterior_top = match g.series() {
            Series::A | Series::C => r,
            Series::B => r - 1,
            Series::D => r - 2,
            _ => unreachable!("classical"),
        };
        let mut raw = Vec::with_capacity(r);
        for k in 1..=exterior_top {
            let weights = exterior_power(&natural, k);
            debug_assert_eq!(weights.total() as i128, binomial_i128(n, k));
            raw.push(character_minus_dimension(&weights)?);
        }
        match g.series() {
            Series::B => raw.push(character_minus_dimension(&spin_weights(c)?)?),
            Series::D => {
                raw.push(character_minus_dimension(&semispin_weights(
                    c,
                    SignParity::Even,
                )?)?);
                raw.push(character_minus_dimension(&semispin_weights(
                    c,
                    SignParity::Odd,
                )?)?);
            }
            _ => {}
        }
        raw
    } else {
        if g.series() == Series::E && g.rank() == 8 {
            return Err(Error::Unsupported(
                "E8 ideal generators need fundamental weight systems beyond desk scale".into(),
            ));
        }
        (1..=rs.rank())
            .map(|node| {
                let weights = restrict_fundamental(rs, c, node)?;
                character_minus_dimension(&weights)
            })
            .collect::<Result<_>>()?
    };
    let (side, generators) = finish_generators(raw, quite_even)?;
    Ok(IdealProfile {
        side,
        generators,
        per_prime: BTreeMap::new(),
    })
}

/// Generators via the fundamental representations, for cross-checks of the
/// exterior-power route on classical groups.
pub fn ideal_generators_fundamental(rs: &RootSystem, c: &UnipotentClass) -> Result<IdealProfile> {
    if c.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let quite_even = crate::invariants::quite_even_class(rs, c)?;
    let raw: Vec<CharacterPoly> = (1..=rs.rank())
        .map(|node| {
            let weights = restrict_fundamental(rs, c, node)?;
            character_minus_dimension(&weights)
        })
        .collect::<Result<_>>()?;
    let (side, generators) = finish_generators(raw, quite_even)?;
    Ok(IdealProfile {
        side,
        generators,
        per_prime: BTreeMap::new(),
    })
}

/// Monic gcd of the generators modulo p, verified to be a power of (x - d).
pub fn reduce_gcd_mod_p(profile: &IdealProfile, p: u64) -> Result<PrimePoly> {
    let mut gcd: Option<PrimePoly> = None;
    for g in &profile.generators {
        let reduced = g.reduce_mod(p);
        if reduced.is_zero() {
            continue;
        }
        gcd = Some(match gcd {
            None => reduced.monic(),
            Some(acc) => acc.gcd(&reduced),
        });
    }
    let gcd = gcd.ok_or(Error::AllGeneratorsZero)?;
    let d = profile.eval_point() as u64;
    let a = gcd.degree().unwrap_or(0);
    let expected = PrimePoly::x_minus_power(p, d, a);
    if gcd != expected {
        return Err(Error::GcdNotPower {
            p,
            d,
            gcd: gcd.to_string(),
        });
    }
    Ok(gcd)
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return vec![];
    }
    let mut sieve = vec![true; bound as usize + 1];
    let mut primes = Vec::new();
    for n in 2..=bound as usize {
        if sieve[n] {
            primes.push(n as u64);
            let mut k = n * n;
            while k <= bound as usize {
                sieve[k] = false;
                k += n;
            }
        }
    }
    primes
}

/// Default prime search bound.
pub const DEFAULT_PRIME_BOUND: u64 = 97;

/// Full ideal profile: generators plus the reduced gcd exponent for every
/// prime up to the bound (degenerate primes recorded as markers).
pub fn ideal_profile(
    rs: &RootSystem,
    c: &UnipotentClass,
    prime_bound: u64,
) -> Result<IdealProfile> {
    let mut profile = ideal_generators(rs, c)?;
    fill_prime_table(&mut profile, prime_bound)?;
    Ok(profile)
}

/// Populate the per-prime table of an existing generator set.
pub fn fill_prime_table(profile: &mut IdealProfile, prime_bound: u64) -> Result<()> {
    for p in primes_up_to(prime_bound) {
        let entry = match reduce_gcd_mod_p(profile, p) {
            Ok(gcd) => PrimeReduction::Exponent(gcd.degree().unwrap_or(0) as u32),
            Err(Error::AllGeneratorsZero) => PrimeReduction::Degenerate,
            Err(e) => return Err(e),
        };
        profile.per_prime.insert(p, entry);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{Partition, UnipotentClass};
    use crate::root_data::GroupType;

    fn class(group: &str, partition: &str) -> UnipotentClass {
        UnipotentClass::classical_single(
            GroupType::parse(group).unwrap(),
            Partition::parse(partition).unwrap(),
        )
        .unwrap()
    }

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(GroupType::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn first_generator_of_b6_row() {
        let b6 = rs("B6");
        let profile = ideal_generators(&b6, &class("B6", "[3,1^10]")).unwrap();
        assert_eq!(profile.side, Side::SL2);
        // natural restriction: (x^2 - 1 + 10) - 13 = x^2 - 4
        assert_eq!(profile.generators[0], IntPoly::new(vec![-4, 0, 1]));
        assert_eq!(profile.generators.len(), 6);
        for g in &profile.generators {
            assert_eq!(g.eval(2), 0);
        }
    }

    #[test]
    fn identity_class_of_a1() {
        let a1 = rs("A1");
        let profile = ideal_generators(&a1, &class("A1", "[2]")).unwrap();
        assert_eq!(profile.side, Side::SL2);
        assert_eq!(profile.generators, vec![IntPoly::new(vec![-2, 1])]);
        let gcd = reduce_gcd_mod_p(&profile, 5).unwrap();
        assert_eq!(gcd, PrimePoly::x_minus_power(5, 2, 1));
    }

    #[test]
    fn quite_even_classes_move_to_the_index_two_ring() {
        let b6 = rs("B6");
        let profile = ideal_generators(&b6, &class("B6", "[5^2,1^3]")).unwrap();
        assert_eq!(profile.side, Side::PSL2);
        for g in &profile.generators {
            assert_eq!(g.eval(3), 0);
        }
    }

    #[test]
    fn published_prime_reductions() {
        let b6 = rs("B6");
        for (partition, p, exponent) in [
            ("[5,2^4]", 3u64, 3u32),
            ("[4^2,3,1^2]", 3, 2),
            ("[5,1^8]", 2, 2),
            ("[4^2,1^5]", 2, 4),
            ("[3,2^2,1^6]", 3, 2),
            ("[2^6,1]", 3, 3),
            ("[3,1^10]", 2, 2),
            ("[2^4,1^5]", 2, 4),
        ] {
            let profile = ideal_profile(&b6, &class("B6", partition), 7).unwrap();
            assert_eq!(
                profile.exponent_at(p),
                Some(exponent),
                "{partition} at p={p}"
            );
        }
    }

    #[test]
    fn trivial_class_is_rejected() {
        let b6 = rs("B6");
        let trivial = UnipotentClass::trivial(GroupType::parse("B6").unwrap());
        assert!(matches!(
            ideal_generators(&b6, &trivial),
            Err(Error::TrivialClass)
        ));
    }

    #[test]
    fn exceptional_generators_via_fundamentals() {
        let g2 = GroupType::parse("G2").unwrap();
        let g2rs = rs("G2");
        let table = crate::orbits::builtin_table(g2).unwrap();
        let c = table.class(g2, "G2").unwrap();
        let profile = ideal_profile(&g2rs, &c, 13).unwrap();
        for g in &profile.generators {
            assert_eq!(g.eval(profile.eval_point()), 0);
        }
        assert_eq!(profile.generators.len(), 2);
        assert!(!profile.per_prime.is_empty());
    }

    #[test]
    fn generator_routes_agree_on_small_classical_groups() {
        for name in ["B4", "C4"] {
            let system = rs(name);
            let group = GroupType::parse(name).unwrap();
            for c in crate::orbits::enumerate_classes(group, false).unwrap() {
                let a = ideal_generators(&system, &c).unwrap();
                let b = ideal_generators_fundamental(&system, &c).unwrap();
                assert_eq!(a.side, b.side, "{c}");
                for p in [2u64, 3, 5] {
                    let ga = match reduce_gcd_mod_p(&a, p) {
                        Ok(g) => Some(g),
                        Err(Error::AllGeneratorsZero) => None,
                        Err(e) => panic!("{c}: {e}"),
                    };
                    let gb = match reduce_gcd_mod_p(&b, p) {
                        Ok(g) => Some(g),
                        Err(Error::AllGeneratorsZero) => None,
                        Err(e) => panic!("{c}: {e}"),
                    };
                    assert_eq!(ga, gb, "{c} at p={p}");
                }
            }
        }
    }

    #[test]
    fn e8_ideal_is_reported_unsupported() {
        let e8group = GroupType::parse("E8").unwrap();
        let e8 = rs("E8");
        let table = crate::orbits::builtin_table(e8group).unwrap();
        let c = table.class(e8group, "A1").unwrap();
        assert!(matches!(
            ideal_generators(&e8, &c),
            Err(Error::Unsupported(_))
        ));
    }
}
