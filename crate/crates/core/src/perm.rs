//! Permutations on `{0, .., n-1}`, permutation groups given by generators,
//! orbits and pointwise stabilizers.
//!
//! Points are 0-based everywhere in this module except in the textual cycle
//! notation, which is 1-based (`(1,2,3)(5,6)`, `()` for the identity).

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {n}",
                    x + 1
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image {} appears twice",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p + 1, n });
                }
                if used[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} occurs in more than one cycle position",
                        p + 1
                    )));
                }
                used[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Transposition of two 0-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self.compose(other)` maps `x` to `self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.images[i] == i
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x).map(|(i, _)| i)
    }

    /// Permutes the coordinates of `x`: the result has `x[p^-1(i)]` at
    /// position `i`, i.e. the entry at position `j` moves to `p(j)`.
    pub fn apply_to_vector<T: Clone>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                found: x.len(),
            });
        }
        let inv = self.inverse();
        Ok(inv.images.iter().map(|&j| x[j].clone()).collect())
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based disjoint cycle notation such as `(1,2,3)(5,6)`.
    /// Whitespace is ignored; `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in {text:?}"
                )));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::InvalidPermutation(format!(
                    "unbalanced parenthesis in {text:?}"
                )));
            };
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                let p: usize = tok.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {tok:?} in {text:?}"))
                })?;
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(n, &cycles)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// An orbit of a point under a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub representative: usize,
    /// Sorted ascending.
    pub members: Vec<usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    pub fn smallest(&self) -> usize {
        self.members[0]
    }
}

/// A permutation group on `n` points, represented by generators.
///
/// Identity generators and duplicates are dropped on construction; an empty
/// list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.degree() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.degree(),
                });
            }
            if !g.is_identity() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        Ok(GeneratorSet {
            n,
            generators: gens,
        })
    }

    pub fn trivial(n: usize) -> Self {
        GeneratorSet {
            n,
            generators: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    fn check_point(&self, i: usize) -> Result<()> {
        if i >= self.n {
            Err(Error::PointOutOfRange {
                point: i + 1,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Breadth-first closure of `{i}` under the generators.
    pub fn orbit(&self, i: usize) -> Result<Orbit> {
        self.check_point(i)?;
        let mut seen = vec![false; self.n];
        seen[i] = true;
        let mut queue = VecDeque::from([i]);
        let mut members = vec![i];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Ok(Orbit {
            representative: i,
            members,
        })
    }

    /// All orbits, ordered by their smallest point; the representative of
    /// each orbit is its smallest point.
    pub fn orbits(&self) -> Vec<Orbit> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for i in 0..self.n {
            if assigned[i] {
                continue;
            }
            let o = self.orbit(i).expect("point in range");
            for &m in &o.members {
                assigned[m] = true;
            }
            out.push(o);
        }
        out
    }

    /// Finds a group element mapping `from` to `to` by breadth-first search
    /// over generator words.
    pub fn element_mapping(&self, from: usize, to: usize) -> Result<Option<Permutation>> {
        self.check_point(from)?;
        self.check_point(to)?;
        let transversal = orbit_transversal(self.n, &self.generators, from);
        Ok(transversal[to].clone())
    }

    pub fn stabilizer_chain(&self, base_prefix: &[usize]) -> Result<StabChain> {
        for &b in base_prefix {
            self.check_point(b)?;
        }
        Ok(StabChain::build(self.n, &self.generators, base_prefix))
    }

    /// Generators of `{g : g(i) = i for all i in fixed}`.
    pub fn pointwise_stabilizer(&self, fixed: &[usize]) -> Result<GeneratorSet> {
        let prefix: Vec<usize> = fixed.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        for &b in &prefix {
            self.check_point(b)?;
        }
        if self.is_trivial() || prefix.is_empty() {
            return Ok(self.clone());
        }
        let chain = StabChain::build(self.n, &self.generators, &prefix);
        let gens = chain
            .strong_generators()
            .iter()
            .filter(|g| prefix.iter().all(|&b| g.fixes(b)))
            .cloned()
            .collect();
        GeneratorSet::new(self.n, gens)
    }

    /// Group order, or `None` if it does not fit in `u128`.
    pub fn order(&self) -> Option<u128> {
        StabChain::build(self.n, &self.generators, &[]).order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.n && StabChain::build(self.n, &self.generators, &[]).contains(p)
    }

    /// All group elements in lexicographic order of their image arrays,
    /// computed by closure under composition. Fails rather than truncating
    /// when the group has more than `cap` elements.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &self.generators {
                let h = g.compose(&e);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Parses a generator file: one permutation per line in 1-based cycle
    /// notation. Blank lines and lines starting with `#` or `c ` are skipped.
    pub fn parse(text: &str, n: usize) -> Result<GeneratorSet> {
        let mut gens = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') || t == "c" || t.starts_with("c ") {
                continue;
            }
            let p = Permutation::parse_cycles(t, n).map_err(|e| Error::Parse {
                line: k + 1,
                message: e.to_string(),
            })?;
            gens.push(p);
        }
        GeneratorSet::new(n, gens)
    }

    /// One generator per line in cycle notation.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }
}

/// Breadth-first transversal: entry `x` holds a product of generators
/// mapping `point` to `x`, or `None` when `x` is outside the orbit.
pub(crate) fn orbit_transversal(
    n: usize,
    gens: &[Permutation],
    point: usize,
) -> Vec<Option<Permutation>> {
    let mut t: Vec<Option<Permutation>> = vec![None; n];
    t[point] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.image(x);
            if t[y].is_none() {
                let ux = t[x].as_ref().expect("visited");
                t[y] = Some(g.compose(ux));
                queue.push_back(y);
            }
        }
    }
    t
}

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Level `i` holds the orbit of `base[i]` under the strong
/// generators fixing `base[..i]`, with a transversal of coset
/// representatives.
///
/// Levels are recomputed from scratch whenever a strong generator is added,
/// which is fine for a few hundred points but not tuned beyond that.
#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(n: usize, gens: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        let strong: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &strong {
            if base.iter().all(|&b| g.fixes(b)) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut chain = StabChain {
            n,
            base,
            strong,
            levels: Vec::new(),
        };
        chain.levels = (0..chain.base.len()).map(|i| chain.compute_level(i)).collect();
        if chain.base.is_empty() {
            return chain;
        }

        let mut i = chain.base.len() - 1;
        'outer: loop {
            let level_gens = chain.level_generators(i);
            let orbit = chain.levels[i].orbit.clone();
            for &beta in &orbit {
                for s in &level_gens {
                    let u_beta = chain.levels[i].transversal[beta].as_ref().expect("in orbit");
                    let target = s.image(beta);
                    let u_target = chain.levels[i].transversal[target].as_ref().expect("in orbit");
                    let schreier = u_target.inverse().compose(&s.compose(u_beta));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, j) = chain.strip(schreier, i + 1);
                    if j < chain.base.len() || !residue.is_identity() {
                        if j == chain.base.len() {
                            chain.base.push(residue.first_moved_point().expect("non-identity"));
                            chain.levels.push(Level {
                                point: 0,
                                orbit: Vec::new(),
                                transversal: Vec::new(),
                            });
                        }
                        chain.strong.push(residue);
                        for l in i + 1..=j {
                            chain.levels[l] = chain.compute_level(l);
                        }
                        i = j;
                        continue 'outer;
                    }
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
        chain
    }

    fn level_generators(&self, i: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|g| self.base[..i].iter().all(|&b| g.fixes(b)))
            .cloned()
            .collect()
    }

    fn compute_level(&self, i: usize) -> Level {
        let gens = self.level_generators(i);
        let point = self.base[i];
        let transversal = orbit_transversal(self.n, &gens, point);
        let orbit = (0..self.n).filter(|&x| transversal[x].is_some()).collect();
        Level {
            point,
            orbit,
            transversal,
        }
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped (`base.len()` when it went all the way).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let beta = g.image(self.levels[l].point);
            match &self.levels[l].transversal[beta] {
                None => return (g, l),
                Some(u) => g = u.inverse().compose(&g),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Sizes of the basic orbits.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        let (residue, j) = self.strip(p.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn s3() -> GeneratorSet {
        GeneratorSet::new(3, vec![p(3, "(1,2)"), p(3, "(1,2,3)")]).unwrap()
    }

    #[test]
    fn apply_identity_and_cycle() {
        let x = [3.0, 1.0, 2.0];
        assert_eq!(Permutation::identity(3).apply_to_vector(&x).unwrap(), x.to_vec());
        let c = p(3, "(1,2,3)");
        assert_eq!(c.apply_to_vector(&[10, 20, 30]).unwrap(), vec![30, 10, 20]);
        assert!(matches!(
            c.apply_to_vector(&[1, 2]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
    }

    #[test]
    fn cycle_notation_prints_and_parses() {
        let q = p(6, "(5, 6)(3,1,2)");
        assert_eq!(q.to_string(), "(1,2,3)(5,6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(p(4, "()").is_identity());
        assert!(p(4, "").is_identity());
    }

    #[test]
    fn orbit_examples() {
        let g = GeneratorSet::new(4, vec![p(4, "(1,2,3)")]).unwrap();
        assert_eq!(g.orbit(0).unwrap().members, vec![0, 1, 2]);
        assert_eq!(GeneratorSet::trivial(4).orbit(1).unwrap().members, vec![1]);
        assert_eq!(s3().orbit(2).unwrap().members, vec![0, 1, 2]);
        assert!(matches!(g.orbit(4), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn stabilizer_examples() {
        let st = s3().pointwise_stabilizer(&[0]).unwrap();
        assert_eq!(st.orbit(1).unwrap().members, vec![1, 2]);
        assert_eq!(st.order(), Some(2));

        let g = s3();
        let same = g.pointwise_stabilizer(&[]).unwrap();
        assert_eq!(same.enumerate_elements(10).unwrap(), g.enumerate_elements(10).unwrap());

        let dbl = GeneratorSet::new(4, vec![p(4, "(1,2)(3,4)")]).unwrap();
        assert!(dbl.pointwise_stabilizer(&[0]).unwrap().is_trivial());
    }

    #[test]
    fn enumeration_sizes_and_cap() {
        assert_eq!(
            GeneratorSet::trivial(3).enumerate_elements(1).unwrap(),
            vec![Permutation::identity(3)]
        );
        let g = GeneratorSet::new(3, vec![p(3, "(1,2)")]).unwrap();
        assert_eq!(g.enumerate_elements(5).unwrap().len(), 2);
        assert_eq!(s3().enumerate_elements(6).unwrap().len(), 6);
        assert_eq!(s3().enumerate_elements(5), Err(Error::GroupTooLarge { cap: 5 }));
    }

    #[test]
    fn chain_order_of_symmetric_groups() {
        for n in 2..9usize {
            let g = GeneratorSet::new(
                n,
                vec![
                    Permutation::transposition(n, 0, 1),
                    Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
                ],
            )
            .unwrap();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(g.order(), Some(fact));
        }
    }

    #[test]
    fn element_mapping_finds_word() {
        let g = s3();
        let e = g.element_mapping(2, 0).unwrap().unwrap();
        assert_eq!(e.image(2), 0);
        assert!(g.contains(&e));
        let triv = GeneratorSet::trivial(3);
        assert_eq!(triv.element_mapping(2, 0).unwrap(), None);
    }

    #[test]
    fn generator_file_round_trip() {
        let g = s3();
        let text = g.to_text();
        assert_eq!(GeneratorSet::parse(&text, 3).unwrap(), g);
        let err = GeneratorSet::parse("(1,2)\n(1,9)\n", 3).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
