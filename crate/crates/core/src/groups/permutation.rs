use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_integer::Integer;

use super::{Elements, EnumerationBudget, Group};
use crate::error::{Error, Result};
use crate::numtheory::{factorial, factorial_factorization, factorize, Factorization};

/// A bijection of `{0, .., n-1}` stored as its image array.
///
/// Products compose left to right: `(g * h)(i) = h(g(i))`, so `g` acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| {
                Error::InvalidPermutation(format!("image {i} out of range 0..{n}"))
            })?;
            if *slot {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
            *slot = true;
        }
        Ok(Self(images))
    }

    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                let i_us = i as usize;
                if i_us >= degree || moved[i_us] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {i} out of range or repeated"
                    )));
                }
                moved[i_us] = true;
                images[i_us] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Cycle lengths, fixed points included, in descending order.
    pub fn cycle_type(&self) -> Vec<u32> {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_even(&self) -> bool {
        let cycles = self.cycle_type().len();
        (self.0.len() - cycles).is_multiple_of(2)
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| acc.lcm(&(len as u64)))
    }

    /// Advances to the next permutation in lexicographic order.
    fn advance(&mut self) -> bool {
        let v = &mut self.0;
        if v.len() < 2 {
            return false;
        }
        let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Symmetric,
    Alternating,
    Generated {
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    },
}

/// `S_n`, `A_n`, or the closure of a set of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    kind: Kind,
}

impl PermutationGroup {
    pub fn symmetric(degree: usize) -> Self {
        Self {
            degree,
            kind: Kind::Symmetric,
        }
    }

    pub fn alternating(degree: usize) -> Self {
        Self {
            degree,
            kind: Kind::Alternating,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Breadth-first closure of `generators` under the product.
pub fn close_generators(
    degree: usize,
    generators: Vec<Permutation>,
    budget: EnumerationBudget,
) -> Result<PermutationGroup> {
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(format!(
            "generator of degree {} in a group of degree {degree}",
            bad.degree()
        )));
    }
    let identity = Permutation::identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() as u64 >= budget.max_elements {
                    return Err(Error::BudgetExceeded {
                        order: format!("more than {}", budget.max_elements),
                        cap: budget.max_elements,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(PermutationGroup {
        degree,
        kind: Kind::Generated {
            generators,
            elements: seen.into_iter().collect(),
        },
    })
}

impl Group for PermutationGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn op(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b)
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn contains(&self, a: &Permutation) -> bool {
        // Payloads are validated bijections by construction.
        if a.degree() != self.degree {
            return false;
        }
        match &self.kind {
            Kind::Symmetric => true,
            Kind::Alternating => a.is_even(),
            Kind::Generated { elements, .. } => elements.binary_search(a).is_ok(),
        }
    }

    fn cardinality(&self) -> BigUint {
        match &self.kind {
            Kind::Symmetric => factorial(self.degree as u64),
            Kind::Alternating if self.degree >= 2 => factorial(self.degree as u64) / 2u32,
            Kind::Alternating => BigUint::from(1u32),
            Kind::Generated { elements, .. } => BigUint::from(elements.len()),
        }
    }

    fn order_factorization(&self) -> Factorization {
        match &self.kind {
            Kind::Symmetric => factorial_factorization(self.degree as u64),
            Kind::Alternating => {
                let full = factorial_factorization(self.degree as u64);
                Factorization::from_pairs(full.pairs().iter().map(|&(p, e)| {
                    if p == 2 {
                        (p, e - 1)
                    } else {
                        (p, e)
                    }
                }))
            }
            Kind::Generated { elements, .. } => {
                factorize(elements.len() as u64).expect("closure size within factorization range")
            }
        }
    }

    fn elements_unchecked(&self) -> Elements<'_, Permutation> {
        match &self.kind {
            Kind::Symmetric => Box::new(LexPermutations::new(self.degree)),
            Kind::Alternating => {
                Box::new(LexPermutations::new(self.degree).filter(|p| p.is_even()))
            }
            Kind::Generated { elements, .. } => Box::new(elements.iter().cloned()),
        }
    }

    fn generators(&self) -> Vec<Permutation> {
        let n = self.degree;
        match &self.kind {
            Kind::Symmetric if n >= 2 => {
                let cycle: Vec<u32> = (0..n as u32).collect();
                vec![
                    Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
                    Permutation::from_cycles(n, &[&cycle]).unwrap(),
                ]
            }
            Kind::Alternating if n >= 3 => (2..n as u32)
                .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
                .collect(),
            Kind::Generated { generators, .. } => generators.clone(),
            _ => Vec::new(),
        }
    }

    fn describe(&self) -> String {
        match &self.kind {
            Kind::Symmetric => format!("SymmetricGroup({})", self.degree),
            Kind::Alternating => format!("AlternatingGroup({})", self.degree),
            Kind::Generated { generators, .. } => format!(
                "GeneratedPermutationGroup({}, {} generators)",
                self.degree,
                generators.len()
            ),
        }
    }
}

struct LexPermutations {
    next: Option<Permutation>,
}

impl LexPermutations {
    fn new(degree: usize) -> Self {
        Self {
            next: Some(Permutation::identity(degree)),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.advance() {
            self.next = Some(succ);
        }
        Some(current)
    }
}
