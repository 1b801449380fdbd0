//! Irreducible decomposition of monomial ideals by splitting mixed
//! generators: if `m = x_i^a m'` with `x_i ∤ m'` and `m' ≠ 1`, then
//! `(G, m) = (G, x_i^a) ∩ (G, m')`. Leaves are generated by pure powers.
//!
//! The radicals of the irredundant components are exactly `Ass(I)`, which
//! makes this an independent oracle for [`crate::assprimes`].

use std::collections::BTreeSet;

use crate::assprimes::PrimeSet;
use crate::budget::Budget;
use crate::error::AlgebraError;
use crate::monomial::{Monomial, MonomialIdeal, MonomialPrime};

fn is_pure_power(m: &Monomial) -> bool {
    m.exponents().iter().filter(|&&e| e > 0).count() == 1
}

/// Irredundant irreducible decomposition of `I`, sorted.
pub fn irreducible_decomposition(
    ideal: &MonomialIdeal,
    budget: &Budget,
) -> Result<Vec<MonomialIdeal>, AlgebraError> {
    if ideal.is_zero() {
        return Err(AlgebraError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(AlgebraError::UnitIdeal);
    }
    let n = ideal.ambient();
    let mut components: Vec<MonomialIdeal> = Vec::new();
    let mut stack = vec![ideal.clone()];
    while let Some(current) = stack.pop() {
        budget.tick(1)?;
        // every component below `current` contains `current`, so it would be
        // redundant next to a component already inside `current`
        if components
            .iter()
            .any(|c| c.is_subset_of(&current).expect("same ambient"))
        {
            continue;
        }
        // generators are lexicographically sorted; take the first mixed one
        let Some(mixed) = current.generators().iter().find(|g| !is_pure_power(g)) else {
            components.push(current);
            continue;
        };
        let var = mixed
            .exponents()
            .iter()
            .position(|&e| e > 0)
            .expect("mixed generator has support");
        let mut pure_exps = vec![0; n];
        pure_exps[var] = mixed.exponents()[var];
        let pure = Monomial::new(pure_exps);
        let mut rest_exps = mixed.exponents().to_vec();
        rest_exps[var] = 0;
        let rest = Monomial::new(rest_exps);

        let others: Vec<Monomial> = current
            .generators()
            .iter()
            .filter(|g| *g != mixed)
            .cloned()
            .collect();
        let with = |m: Monomial| {
            let mut gens = others.clone();
            gens.push(m);
            MonomialIdeal::new(n, gens).expect("same ambient")
        };
        // pushed second so it is processed first
        stack.push(with(rest));
        stack.push(with(pure));
    }
    let mut irredundant: Vec<MonomialIdeal> = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        let redundant = components.iter().enumerate().any(|(j, d)| {
            j != i && d.is_subset_of(c).expect("same ambient") && (d != c || j < i)
        });
        if !redundant {
            irredundant.push(c.clone());
        }
    }
    irredundant.sort_by(|a, b| a.generators().cmp(b.generators()));
    Ok(irredundant)
}

/// Radicals of the irreducible components: the associated primes of `I`.
pub fn component_radicals(
    ideal: &MonomialIdeal,
    budget: &Budget,
) -> Result<PrimeSet, AlgebraError> {
    let comps = irreducible_decomposition(ideal, budget)?;
    let n = ideal.ambient();
    comps
        .iter()
        .map(|c| MonomialPrime::new(n, c.support()))
        .collect::<Result<BTreeSet<_>, _>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Exp;

    fn ideal(n: usize, gens: &[&[Exp]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn intersect_all(n: usize, comps: &[MonomialIdeal]) -> MonomialIdeal {
        // intersection of monomial ideals: lcms of generator pairs
        comps
            .iter()
            .skip(1)
            .fold(comps[0].clone(), |acc, c| {
                let mut gens = Vec::new();
                for a in acc.generators() {
                    for b in c.generators() {
                        gens.push(a.lcm(b).unwrap());
                    }
                }
                MonomialIdeal::new(n, gens).unwrap()
            })
    }

    #[test]
    fn single_split() {
        let comps = irreducible_decomposition(&ideal(2, &[&[1, 1]]), &Budget::unlimited()).unwrap();
        assert_eq!(comps, vec![ideal(2, &[&[0, 1]]), ideal(2, &[&[1, 0]])]);
    }

    #[test]
    fn embedded_component() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let comps = irreducible_decomposition(&i, &Budget::unlimited()).unwrap();
        let mut expected = vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[2, 0], &[0, 1]])];
        expected.sort_by(|a, b| a.generators().cmp(b.generators()));
        assert_eq!(comps, expected);
        assert_eq!(intersect_all(2, &comps), i);
    }

    #[test]
    fn triangle_square_radicals() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let rads = component_radicals(&t.power(2), &Budget::unlimited()).unwrap();
        let expected: PrimeSet = [vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
            .into_iter()
            .map(|s| MonomialPrime::from_indices(3, s).unwrap())
            .collect();
        assert_eq!(rads, expected);
    }

    #[test]
    fn components_intersect_back_and_are_irredundant() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3], &[1, 1, 1]]);
        let comps = irreducible_decomposition(&i, &Budget::unlimited()).unwrap();
        assert_eq!(intersect_all(3, &comps), i);
        for (a, ca) in comps.iter().enumerate() {
            for (b, cb) in comps.iter().enumerate() {
                if a != b {
                    assert!(!ca.is_subset_of(cb).unwrap());
                }
            }
        }
    }

    #[test]
    fn budget_is_honored() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let r = irreducible_decomposition(&t.power(2), &Budget::with_steps(1));
        assert!(matches!(r, Err(AlgebraError::Budget(_))));
    }
}
