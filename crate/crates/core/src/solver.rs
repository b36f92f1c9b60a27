//! Exact maximum-weight stable set, optionally restricted by SST cuts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sst::SstCliqueCut;

pub const BRUTE_FORCE_CAP: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableSetSolution {
    /// Sorted, 0-based.
    pub members: Vec<usize>,
    pub value: i64,
    pub nodes_explored: u64,
}

fn check_cuts(n: usize, cuts: &[SstCliqueCut]) -> Result<()> {
    for c in cuts {
        for &v in std::iter::once(&c.leader).chain(&c.clique) {
            if v >= n {
                return Err(Error::PointOutOfRange { point: v + 1, n });
            }
        }
    }
    Ok(())
}

fn members_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Visits every stable set (as a bitmask) satisfying the cuts.
fn for_each_feasible(g: &Graph, cuts: &[SstCliqueCut], mut visit: impl FnMut(u32, i64)) -> Result<u64> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force stable set enumeration",
            size: n,
            cap: BRUTE_FORCE_CAP,
            hint: "; use the branch-and-bound solver",
        });
    }
    check_cuts(n, cuts)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let cut_masks: Vec<(u32, u32)> = cuts
        .iter()
        .map(|c| (1u32 << c.leader, c.clique.iter().fold(0u32, |m, &f| m | 1 << f)))
        .collect();
    let mut visited = 0u64;
    // explicit stack of (next node, chosen set, blocked set, value)
    let mut stack = vec![(0usize, 0u32, 0u32, 0i64)];
    while let Some((v, set, blocked, value)) = stack.pop() {
        visited += 1;
        if v == n {
            let ok = cut_masks
                .iter()
                .all(|&(l, c)| (set & c).count_ones() <= (set & l != 0) as u32);
            if ok {
                visit(set, value);
            }
            continue;
        }
        stack.push((v + 1, set, blocked, value));
        if blocked >> v & 1 == 0 {
            stack.push((v + 1, set | 1 << v, blocked | adj[v], value + g.weight(v)));
        }
    }
    Ok(visited)
}

/// Exhaustive optimum over stable sets satisfying `cuts`; ties go to the
/// lexicographically smallest member list. Limited to 25 nodes.
pub fn brute_force_max_stable(g: &Graph, cuts: &[SstCliqueCut]) -> Result<StableSetSolution> {
    let mut best: Option<(i64, Vec<usize>)> = None;
    let visited = for_each_feasible(g, cuts, |set, value| {
        let better = match &best {
            None => true,
            Some((bv, _)) if value > *bv => true,
            Some((bv, bm)) if value == *bv => members_of(set) < *bm,
            _ => false,
        };
        if better {
            best = Some((value, members_of(set)));
        }
    })?;
    let (value, members) = best.expect("the empty set is always feasible");
    Ok(StableSetSolution {
        members,
        value,
        nodes_explored: visited,
    })
}

/// Optimum value and every optimal stable set satisfying `cuts`, in
/// lexicographic order.
pub fn all_max_stable_sets(g: &Graph, cuts: &[SstCliqueCut]) -> Result<(i64, Vec<Vec<usize>>)> {
    let mut best = i64::MIN;
    let mut sets = Vec::new();
    for_each_feasible(g, cuts, |set, value| {
        if value > best {
            best = value;
            sets.clear();
        }
        if value == best {
            sets.push(members_of(set));
        }
    })?;
    sets.sort();
    Ok((best, sets))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum State {
    Free,
    In,
    Out,
}

struct Bnb<'a> {
    g: &'a Graph,
    cuts: &'a [SstCliqueCut],
    /// Cuts by leader and by clique member.
    as_leader: Vec<Vec<usize>>,
    as_member: Vec<Vec<usize>>,
    state: Vec<State>,
    value: i64,
    best: Option<(i64, Vec<usize>)>,
    explored: u64,
}

impl Bnb<'_> {
    /// Sets `v` and propagates edge and cut implications; `false` on a
    /// conflict. Changed nodes are pushed to `trail` either way.
    fn assign(&mut self, v: usize, s: State, trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![(v, s)];
        while let Some((u, s)) = queue.pop() {
            match self.state[u] {
                State::Free => {}
                cur if cur == s => continue,
                _ => return false,
            }
            self.state[u] = s;
            trail.push(u);
            if s == State::In {
                self.value += self.g.weight(u);
                for &w in self.g.neighbors(u) {
                    queue.push((w, State::Out));
                }
                for &ci in &self.as_member[u] {
                    let c = &self.cuts[ci];
                    queue.push((c.leader, State::In));
                    for &f in &c.clique {
                        if f != u {
                            queue.push((f, State::Out));
                        }
                    }
                }
            } else {
                for &ci in &self.as_leader[u] {
                    for &f in &self.cuts[ci].clique {
                        queue.push((f, State::Out));
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize]) {
        for &u in trail.iter().rev() {
            if self.state[u] == State::In {
                self.value -= self.g.weight(u);
            }
            self.state[u] = State::Free;
        }
    }

    /// Current value plus, for each clique of a greedy cover of the free
    /// positive-weight nodes, the largest weight in it.
    fn bound(&self, free: &[usize]) -> i64 {
        let mut covered = vec![false; free.len()];
        let mut total = self.value;
        for i in 0..free.len() {
            if covered[i] {
                continue;
            }
            covered[i] = true;
            let mut clique = vec![free[i]];
            let mut top = self.g.weight(free[i]);
            for j in i + 1..free.len() {
                if !covered[j] && clique.iter().all(|&c| self.g.has_edge(c, free[j])) {
                    covered[j] = true;
                    clique.push(free[j]);
                    top = top.max(self.g.weight(free[j]));
                }
            }
            total += top;
        }
        total
    }

    fn search(&mut self) {
        self.explored += 1;
        let mut free: Vec<usize> = (0..self.g.n())
            .filter(|&v| self.state[v] == State::Free && self.g.weight(v) > 0)
            .collect();
        free.sort_by_key(|&v| (std::cmp::Reverse(self.g.weight(v)), v));
        if let Some((best, _)) = &self.best {
            if self.bound(&free) <= *best {
                return;
            }
        }
        let branch = free.iter().copied().max_by_key(|&v| {
            let d = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.state[w] == State::Free)
                .count();
            (d, std::cmp::Reverse(v))
        });
        let Some(v) = branch else {
            // remaining free nodes have weight <= 0 and can all stay out
            let members: Vec<usize> = (0..self.g.n()).filter(|&u| self.state[u] == State::In).collect();
            if self.best.as_ref().is_none_or(|(b, _)| self.value > *b) {
                self.best = Some((self.value, members));
            }
            return;
        };
        for s in [State::In, State::Out] {
            let mut trail = Vec::new();
            if self.assign(v, s, &mut trail) {
                self.search();
            }
            self.undo(&trail);
        }
    }
}

/// Exact optimum by depth-first branch and bound with cut propagation:
/// taking a clique member takes its leader and drops the other members;
/// dropping a leader drops its whole clique.
pub fn branch_and_bound_max_stable(g: &Graph, cuts: &[SstCliqueCut]) -> Result<StableSetSolution> {
    let n = g.n();
    check_cuts(n, cuts)?;
    let mut as_leader = vec![Vec::new(); n];
    let mut as_member = vec![Vec::new(); n];
    for (i, c) in cuts.iter().enumerate() {
        as_leader[c.leader].push(i);
        for &f in &c.clique {
            as_member[f].push(i);
        }
    }
    let mut bnb = Bnb {
        g,
        cuts,
        as_leader,
        as_member,
        state: vec![State::Free; n],
        value: 0,
        best: None,
        explored: 0,
    };
    // a cut whose leader is in its own clique forbids the whole clique
    let mut ok = true;
    for c in cuts {
        if c.clique.contains(&c.leader) {
            for &f in &c.clique {
                let mut trail = Vec::new();
                ok &= bnb.assign(f, State::Out, &mut trail);
            }
        }
    }
    if ok {
        bnb.search();
    }
    let (value, members) = bnb.best.unwrap_or((0, Vec::new()));
    Ok(StableSetSolution {
        members,
        value,
        nodes_explored: bnb.explored,
    })
}
