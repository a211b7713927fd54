use std::collections::BTreeSet;

use num_traits::Signed;

use super::{CartanMatrix, Family, Root, RootSystem, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::rational_coordinates;

/// A closed, negation-stable subset of the roots of `parent`.
#[derive(Debug, Clone)]
pub struct Subsystem<'a> {
    parent: &'a RootSystem,
    members: BTreeSet<Root>,
}

impl<'a> Subsystem<'a> {
    pub fn new(parent: &'a RootSystem, members: impl IntoIterator<Item = Root>) -> Result<Self> {
        let members: BTreeSet<Root> = members.into_iter().collect();
        for r in &members {
            parent.check_root(r)?;
            if !members.contains(&-r) {
                return Err(Error::NotClosed(format!("{r} present but its negative is not")));
            }
        }
        let sub = Subsystem { parent, members };
        if let Some((a, b)) = sub.closure_violation() {
            return Err(Error::NotClosed(format!("{a} + {b} is a root outside the subsystem")));
        }
        Ok(sub)
    }

    pub fn full(parent: &'a RootSystem) -> Self {
        Subsystem {
            parent,
            members: parent.roots().collect(),
        }
    }

    /// Smallest closed, negation-stable subsystem containing `gens`.
    pub fn generated_by(parent: &'a RootSystem, gens: &[Root]) -> Result<Self> {
        let mut members = BTreeSet::new();
        for g in gens {
            parent.check_root(g)?;
            members.insert(g.clone());
            members.insert(-g);
        }
        let mut frontier: Vec<Root> = members.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                let current: Vec<Root> = members.iter().cloned().collect();
                for b in &current {
                    let s = a + b;
                    if parent.contains(&s) && members.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        Ok(Subsystem { parent, members })
    }

    fn closure_violation(&self) -> Option<(Root, Root)> {
        for a in &self.members {
            for b in &self.members {
                let s = a + b;
                if self.parent.contains(&s) && !self.members.contains(&s) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn parent(&self) -> &'a RootSystem {
        self.parent
    }

    pub fn members(&self) -> &BTreeSet<Root> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.members.contains(r)
    }

    /// Members that are positive in the parent.
    pub fn positive_members(&self) -> impl Iterator<Item = &Root> {
        self.members.iter().filter(|r| r.is_positive())
    }

    /// The simple system induced by the parent's positivity: positive members
    /// that are not a sum of two positive members.
    pub fn simple_system(&self) -> Vec<Root> {
        let pos: BTreeSet<&Root> = self.positive_members().collect();
        let mut simple: Vec<Root> = pos
            .iter()
            .filter(|&&g| !pos.iter().any(|&b| b != g && pos.contains(&(g - b))))
            .map(|&r| r.clone())
            .collect();
        simple.sort_by(|a, b| a.height().cmp(&b.height()).then(b.cmp(a)));
        simple
    }

    /// Whether `candidate` is a simple system of this subsystem.
    pub fn is_simple_system(&self, candidate: &[Root]) -> Result<bool> {
        for c in candidate {
            if !self.contains(c) {
                return Err(Error::NotInSubsystem(c.coeffs().to_vec()));
            }
        }
        let cartan = candidate_cartan(self.parent, candidate);
        let gcm_ok = cartan.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| if i == j { v == 2 } else { v <= 0 })
        });
        if !gcm_ok {
            return Ok(false);
        }
        let basis: Vec<Vec<i64>> = candidate.iter().map(|r| r.coeffs().to_vec()).collect();
        for m in &self.members {
            let Some(coords) = rational_coordinates(&basis, m.coeffs()) else {
                return Ok(false);
            };
            if !coords.iter().all(|c| c.is_integer()) {
                return Ok(false);
            }
            let nonneg = coords.iter().all(|c| !c.is_negative());
            let nonpos = coords.iter().all(|c| !c.is_positive());
            if !(nonneg || nonpos) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The simple types of the irreducible components, largest rank first.
    pub fn classify_type(&self) -> Result<Vec<SimpleType>> {
        classify_simple_system(self.parent, &self.simple_system())
    }
}

/// `⟨b_i, b_j^∨⟩` for a list of roots of `parent`.
pub(crate) fn candidate_cartan(parent: &RootSystem, roots: &[Root]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|a| roots.iter().map(|b| parent.pairing(a, b)).collect())
        .collect()
}

/// Classifies the root system spanned by the given simple system.
pub fn classify_simple_system(parent: &RootSystem, simple: &[Root]) -> Result<Vec<SimpleType>> {
    identify_cartan(&candidate_cartan(parent, simple))
}

/// Splits a Cartan matrix into connected components and names each one.
pub fn identify_cartan(m: &[Vec<i64>]) -> Result<Vec<SimpleType>> {
    let n = m.len();
    let mut comp = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut nodes = vec![start];
        comp[start] = id;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if comp[j] == usize::MAX && m[i][j] != 0 {
                    comp[j] = id;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        components.push(nodes);
    }

    let mut types = components
        .iter()
        .map(|nodes| {
            let sub: Vec<Vec<i64>> = nodes
                .iter()
                .map(|&i| nodes.iter().map(|&j| m[i][j]).collect())
                .collect();
            match_component(&sub)
        })
        .collect::<Result<Vec<_>>>()?;
    types.sort_by(|a, b| b.rank().cmp(&a.rank()).then(a.family().cmp(&b.family())));
    Ok(types)
}

/// Types that are not isomorphic to one another, one per isomorphism class.
fn catalogue(rank: usize) -> Vec<SimpleType> {
    use Family::*;
    let mut out = vec![SimpleType::new(A, rank).unwrap()];
    if rank >= 2 {
        out.push(SimpleType::new(B, rank).unwrap());
    }
    if rank >= 3 {
        out.push(SimpleType::new(C, rank).unwrap());
    }
    if rank >= 4 {
        out.push(SimpleType::new(D, rank).unwrap());
    }
    for (f, r) in [(E, 6), (E, 7), (E, 8), (F, 4), (G, 2)] {
        if r == rank {
            out.push(SimpleType::new(f, r).unwrap());
        }
    }
    out
}

#[derive(Debug, PartialEq, Eq)]
struct Signature {
    rank: usize,
    edges: Vec<(i64, i64)>,
    degrees: Vec<usize>,
}

fn signature(m: &[Vec<i64>]) -> Signature {
    let n = m.len();
    let mut edges = Vec::new();
    let mut degrees = vec![0; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if m[i][j] != 0 {
                let (a, b) = (m[i][j], m[j][i]);
                edges.push((a.min(b), a.max(b)));
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    edges.sort_unstable();
    degrees.sort_unstable();
    Signature {
        rank: n,
        edges,
        degrees,
    }
}

fn match_component(m: &[Vec<i64>]) -> Result<SimpleType> {
    let sig = signature(m);
    for t in catalogue(m.len()) {
        let cat = t.cartan();
        if signature(cat.rows()) != sig {
            continue;
        }
        if permutation_match(&cat, m) {
            return Ok(t);
        }
    }
    Err(Error::Unclassified(m.to_vec()))
}

/// Searches for `π` with `m[π(i)][π(j)] == cat[i][j]` for all `i`, `j`.
fn permutation_match(cat: &CartanMatrix, m: &[Vec<i64>]) -> bool {
    fn extend(cat: &CartanMatrix, m: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = perm.len();
        if i == m.len() {
            return true;
        }
        for cand in 0..m.len() {
            if used[cand] {
                continue;
            }
            let ok = (0..i).all(|k| {
                m[cand][perm[k]] == cat.entry(i, k) && m[perm[k]][cand] == cat.entry(k, i)
            });
            if ok {
                used[cand] = true;
                perm.push(cand);
                if extend(cat, m, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    if cat.rank() != m.len() {
        return false;
    }
    extend(cat, m, &mut Vec::with_capacity(m.len()), &mut vec![false; m.len()])
}

impl<'a> PartialEq for Subsystem<'a> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn names(ts: &[SimpleType]) -> Vec<String> {
        ts.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn every_type_classifies_as_itself() {
        for t in SimpleType::all_up_to(8) {
            let sys = RootSystem::new(t);
            let got = Subsystem::full(&sys).classify_type().unwrap();
            let expect = match (t.family(), t.rank()) {
                (Family::C, 2) => vec!["B2".to_string()],
                (Family::D, 2) => vec!["A1".to_string(), "A1".to_string()],
                (Family::D, 3) => vec!["A3".to_string()],
                _ => vec![t.to_string()],
            };
            assert_eq!(names(&got), expect, "{t}");
        }
    }

    #[test]
    fn simple_system_checks() {
        let e8 = rs("E8");
        let full = Subsystem::full(&e8);
        let pi = e8.simple_roots();
        assert!(full.is_simple_system(&pi).unwrap());
        assert!(!full.is_simple_system(&pi[1..]).unwrap());
        // positive roots but pairwise obtuse fails: α₁ and α₁+α₃
        let bad = vec![Root::simple(8, 0), &Root::simple(8, 0) + &Root::simple(8, 2)];
        assert!(!full.is_simple_system(&bad).unwrap());
    }

    #[test]
    fn candidate_outside_subsystem_is_rejected() {
        let a2 = rs("A2");
        let a = Root::simple(2, 0);
        let sub = Subsystem::new(&a2, [a.clone(), -&a]).unwrap();
        assert!(matches!(
            sub.is_simple_system(&[Root::simple(2, 1)]),
            Err(Error::NotInSubsystem(_))
        ));
    }

    #[test]
    fn closure_is_enforced() {
        let a2 = rs("A2");
        let a = Root::simple(2, 0);
        let b = Root::simple(2, 1);
        assert!(Subsystem::new(&a2, [a.clone(), -&a, b.clone(), -&b]).is_err());
        assert!(Subsystem::new(&a2, [a.clone()]).is_err());
        assert!(Subsystem::new(&a2, [Root::new(vec![2, 0])]).is_err());
    }

    #[test]
    fn b2_long_roots_form_a1_a1() {
        let b2 = rs("B2");
        // long roots: α₁ and α₁+2α₂
        let long: Vec<Root> = b2
            .roots()
            .filter(|r| b2.inner(r, r) == 4)
            .collect();
        let sub = Subsystem::new(&b2, long).unwrap();
        assert_eq!(names(&sub.classify_type().unwrap()), vec!["A1", "A1"]);
    }

    #[test]
    fn unmatched_matrix_is_reported() {
        // affine A1
        let m = vec![vec![2, -2], vec![-2, 2]];
        assert!(matches!(identify_cartan(&m), Err(Error::Unclassified(_))));
    }
}
