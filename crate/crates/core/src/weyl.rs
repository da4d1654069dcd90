//! Weyl group actions on weights: simple reflections, projection to the
//! dominant chamber and orbit enumeration.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{DominantWeight, RootSystem, Weight};

/// The orbit sum `We_λ` of a dominant weight, with its full orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSum {
    dominant_rep: DominantWeight,
    elements: Vec<Weight>,
}

impl OrbitSum {
    pub fn dominant_rep(&self) -> &DominantWeight {
        &self.dominant_rep
    }

    /// Orbit elements in lexicographic order of canonical coordinates.
    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// `s_i(w) = w - ⟨w, α_i^∨⟩ α_i`, with `i` 1-based.
pub fn simple_reflection(rs: &RootSystem, i: usize, w: &Weight) -> Result<Weight> {
    rs.check(w)?;
    rs.check_index(i)?;
    let mut labels = rs.dynkin_labels(w);
    reflect_labels(rs, i - 1, &mut labels);
    Ok(rs.weight_of_labels(&labels))
}

/// Moves `w` into the dominant chamber by reflecting at the first negative
/// Dynkin label until none is left. Returns the dominant weight and the
/// number of reflections applied.
pub fn dominant_projection(rs: &RootSystem, w: &Weight) -> Result<(DominantWeight, usize)> {
    rs.check(w)?;
    let mut labels = rs.dynkin_labels(w);
    let steps = project_labels(rs, &mut labels);
    Ok((rs.weight_of_labels(&labels), steps))
}

pub fn orbit(rs: &RootSystem, lambda: &DominantWeight) -> Result<OrbitSum> {
    rs.check(lambda)?;
    let labels = rs.dynkin_labels(lambda);
    if labels.iter().any(|&a| a < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut elements: Vec<Weight> = orbit_labels(rs, &labels)?
        .iter()
        .map(|l| rs.weight_of_labels(l))
        .collect();
    elements.sort();
    Ok(OrbitSum {
        dominant_rep: lambda.clone(),
        elements,
    })
}

/// `|W|`, computed as the size of the orbit of the regular weight ρ.
pub fn weyl_group_order(rs: &RootSystem) -> Result<u64> {
    let labels = rs.dynkin_labels(rs.rho());
    Ok(orbit_labels(rs, &labels)?.len() as u64)
}

/// `|W λ|` for a dominant label vector, as `|W| / |W_J|` where `J` is the
/// set of vanishing labels. Both orders come from the product formula
/// `∏_{α>0} (ht α + 1) / ht α` over the relevant positive roots.
pub fn orbit_size(rs: &RootSystem, dominant_labels: &[i64]) -> u64 {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for c in rs.pos_root_coeffs() {
        let in_stabilizer = c.iter().zip(dominant_labels).all(|(&k, &a)| k == 0 || a == 0);
        if !in_stabilizer {
            let h: i64 = c.iter().sum();
            num *= h + 1;
            den *= h;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q.try_into().expect("orbit size fits in u64")
}

pub(crate) fn reflect_labels(rs: &RootSystem, i: usize, labels: &mut [i64]) {
    let a = labels[i];
    if a != 0 {
        for (x, c) in labels.iter_mut().zip(&rs.cartan()[i]) {
            *x -= a * c;
        }
    }
}

pub(crate) fn project_labels(rs: &RootSystem, labels: &mut [i64]) -> usize {
    let mut steps = 0;
    while let Some(i) = labels.iter().position(|&a| a < 0) {
        reflect_labels(rs, i, labels);
        steps += 1;
    }
    steps
}

/// Orbit of a dominant label vector, generated by descending reflections
/// (only at positive labels); every orbit element is reached this way.
pub(crate) fn orbit_labels(rs: &RootSystem, dominant: &[i64]) -> Result<Vec<Vec<i64>>> {
    let cap = rs.limits().orbit_cap;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(dominant.to_vec());
    let mut frontier = vec![dominant.to_vec()];
    let mut out = vec![dominant.to_vec()];
    while let Some(x) = frontier.pop() {
        for i in 0..x.len() {
            if x[i] <= 0 {
                continue;
            }
            let mut y = x.clone();
            reflect_labels(rs, i, &mut y);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::ResourceCap {
                        what: "Weyl orbit size",
                        needed: seen.len() as u64,
                        cap,
                    });
                }
                out.push(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(out)
}

/// Orbit of a strictly dominant label vector with the sign `(-1)^{ℓ(w)}`
/// of the unique group element reaching each point.
pub(crate) fn signed_regular_orbit(rs: &RootSystem, regular: &[i64]) -> Result<HashMap<Vec<i64>, i8>> {
    debug_assert!(regular.iter().all(|&a| a > 0));
    let cap = rs.limits().weyl_group_cap;
    let mut signs: HashMap<Vec<i64>, i8> = HashMap::new();
    signs.insert(regular.to_vec(), 1);
    let mut frontier = vec![regular.to_vec()];
    while let Some(x) = frontier.pop() {
        let s = signs[&x];
        for i in 0..x.len() {
            if x[i] <= 0 {
                continue;
            }
            let mut y = x.clone();
            reflect_labels(rs, i, &mut y);
            if !signs.contains_key(&y) {
                if signs.len() as u64 >= cap {
                    return Err(Error::ResourceCap {
                        what: "Weyl group order",
                        needed: signs.len() as u64 + 1,
                        cap,
                    });
                }
                signs.insert(y.clone(), -s);
                frontier.push(y);
            }
        }
    }
    Ok(signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Limits, RootSystemKind};

    fn c2() -> RootSystem {
        RootSystem::build(RootSystemKind::SpC(2)).unwrap()
    }

    #[test]
    fn reflections_in_c2() {
        let rs = c2();
        let w = rs.weight(vec![1, 0]).unwrap();
        assert_eq!(simple_reflection(&rs, 2, &w).unwrap(), w);
        let v = rs.weight(vec![0, 1]).unwrap();
        assert_eq!(simple_reflection(&rs, 2, &v).unwrap().coords(), &[0, -1]);
        assert!(matches!(
            simple_reflection(&rs, 3, &v),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(simple_reflection(&rs, 0, &v).is_err());
    }

    #[test]
    fn reflection_is_involution() {
        let rs = RootSystem::build(RootSystemKind::E6).unwrap();
        let w = rs.weight(vec![1, -2, 0, 3, -1, 2]).unwrap();
        for i in 1..=6 {
            let once = simple_reflection(&rs, i, &w).unwrap();
            assert_eq!(simple_reflection(&rs, i, &once).unwrap(), w);
        }
    }

    #[test]
    fn e6_reflection_of_first_fundamental_weight() {
        let rs = RootSystem::build(RootSystemKind::E6).unwrap();
        let w1 = rs.fundamental_weight(1).unwrap().clone();
        let got = simple_reflection(&rs, 1, &w1).unwrap();
        let alpha1 = rs.simple_root(1).unwrap();
        let expect: Vec<i64> = w1.coords().iter().zip(alpha1.coords()).map(|(a, b)| a - b).collect();
        assert_eq!(got.coords(), &expect[..]);
    }

    #[test]
    fn dominant_projection_examples() {
        let rs = c2();
        let (d, _) = dominant_projection(&rs, &rs.weight(vec![-1, 2]).unwrap()).unwrap();
        assert_eq!(d.coords(), &[2, 1]);
        let (d, steps) = dominant_projection(&rs, &rs.weight(vec![2, 1]).unwrap()).unwrap();
        assert_eq!((d.coords(), steps), (&[2, 1][..], 0));

        let a3 = RootSystem::build(RootSystemKind::SlA(2)).unwrap();
        let base = [1, 0, 0, -1];
        let target = a3.weight(base.to_vec()).unwrap();
        for perm in permutations(&base) {
            let (d, _) = dominant_projection(&a3, &a3.weight(perm).unwrap()).unwrap();
            assert_eq!(d, target);
        }
    }

    #[test]
    fn c2_orbit_of_first_basis_vector() {
        let rs = c2();
        let o = orbit(&rs, &rs.weight(vec![1, 0]).unwrap()).unwrap();
        let got: Vec<&[i64]> = o.elements().iter().map(|w| w.coords()).collect();
        assert_eq!(got, vec![&[-1, 0][..], &[0, -1], &[0, 1], &[1, 0]]);
    }

    #[test]
    fn orbit_sizes() {
        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert_eq!(orbit(&e6, e6.fundamental_weight(1).unwrap()).unwrap().size(), 27);
        assert_eq!(orbit(&e6, e6.fundamental_weight(2).unwrap()).unwrap().size(), 72);
        for kind in [RootSystemKind::SpC(3), RootSystemKind::SlA(2), RootSystemKind::E6] {
            let rs = RootSystem::build(kind).unwrap();
            assert_eq!(orbit(&rs, &rs.zero()).unwrap().size(), 1);
        }
    }

    #[test]
    fn non_dominant_orbit_rejected() {
        let rs = c2();
        assert!(matches!(
            orbit(&rs, &rs.weight(vec![0, 1]).unwrap()),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group_order(&c2()).unwrap(), 8);
        let a3 = RootSystem::build(RootSystemKind::SlA(2)).unwrap();
        assert_eq!(weyl_group_order(&a3).unwrap(), 24);
        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert_eq!(weyl_group_order(&e6).unwrap(), 51840);
        for n in 1..=4u64 {
            let fact: u64 = (1..=n).product();
            let c = RootSystem::build(RootSystemKind::SpC(n as u32)).unwrap();
            assert_eq!(weyl_group_order(&c).unwrap(), (1 << n) * fact);
            let fact2: u64 = (1..=2 * n).product();
            let a = RootSystem::build(RootSystemKind::SlA(n as u32)).unwrap();
            assert_eq!(weyl_group_order(&a).unwrap(), fact2);
        }
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let rs = RootSystem::build(RootSystemKind::E6)
            .unwrap()
            .with_limits(Limits { orbit_cap: 100, ..Limits::default() });
        assert!(matches!(weyl_group_order(&rs), Err(Error::ResourceCap { .. })));
        assert_eq!(orbit(&rs, rs.fundamental_weight(1).unwrap()).unwrap().size(), 27);
    }

    #[test]
    fn signed_orbit_of_rho_has_balanced_signs() {
        let rs = RootSystem::build(RootSystemKind::SpC(3)).unwrap();
        let signs = signed_regular_orbit(&rs, &[1, 1, 1]).unwrap();
        assert_eq!(signs.len(), 48);
        assert_eq!(signs.values().map(|&s| s as i64).sum::<i64>(), 0);
    }

    #[test]
    fn orbit_size_formula_matches_enumeration() {
        for kind in [RootSystemKind::SpC(3), RootSystemKind::SlA(2), RootSystemKind::SlA(3), RootSystemKind::E6] {
            let rs = RootSystem::build(kind).unwrap();
            let r = rs.rank();
            for mask in 0u32..(1 << r) {
                let labels: Vec<i64> = (0..r).map(|i| ((mask >> i) & 1) as i64).collect();
                if kind == RootSystemKind::E6 && mask.count_ones() > 3 {
                    continue;
                }
                let n = orbit_labels(&rs, &labels).unwrap().len() as u64;
                assert_eq!(orbit_size(&rs, &labels), n, "{kind} {labels:?}");
            }
        }
        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert_eq!(orbit_size(&e6, &[1; 6]), 51840);
    }

    fn permutations(v: &[i64]) -> Vec<Vec<i64>> {
        if v.len() <= 1 {
            return vec![v.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
}
