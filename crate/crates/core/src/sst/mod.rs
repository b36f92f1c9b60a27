//! Schreier-Sims tables and the cuts derived from them.
//!
//! A table is built by repeatedly picking a leader, recording its orbit
//! under the current group and passing to the pointwise stabilizer. Every
//! follower `f` of a leader `l` yields the cut `x_f <= x_l`; a clique `C` of
//! followers yields the stronger `sum_{f in C} x_f <= x_l`.

mod repair;
mod table;

pub use repair::{repair_solution, repair_with_witness};
pub use table::{build_sst_table, build_stringent_sst_table, is_stringent, DEFAULT_MAX_ROUNDS};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{greedy_clique_cover, Graph};

/// Which nontrivial orbit opens the next round.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitRule {
    Min,
    Max,
}

impl FromStr for OrbitRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(OrbitRule::Min),
            "max" => Ok(OrbitRule::Max),
            other => Err(Error::InvalidInput(format!(
                "orbit rule must be 'min' or 'max', got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for OrbitRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitRule::Min => "min",
            OrbitRule::Max => "max",
        })
    }
}

/// One leader with its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub leader: usize,
    /// Sorted, contains the leader.
    pub orbit: Vec<usize>,
    /// `orbit` without the leader.
    pub followers: Vec<usize>,
    /// Points fixed by the group the orbit was computed under.
    pub stabilized: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SstTable {
    pub n: usize,
    pub rounds: Vec<Round>,
}

/// `-x_leader + sum_{f in clique} x_f <= 0`. A singleton clique is a plain
/// leader-follower cut.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SstCliqueCut {
    pub leader: usize,
    pub clique: Vec<usize>,
}

impl SstCliqueCut {
    pub fn plain(leader: usize, follower: usize) -> Self {
        SstCliqueCut {
            leader,
            clique: vec![follower],
        }
    }
}

impl SstTable {
    pub fn empty(n: usize) -> Self {
        SstTable {
            n,
            rounds: Vec::new(),
        }
    }

    pub fn leaders(&self) -> Vec<usize> {
        self.rounds.iter().map(|r| r.leader).collect()
    }

    /// Leader-follower pairs in table order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rounds
            .iter()
            .flat_map(|r| r.followers.iter().map(move |&f| (r.leader, f)))
            .collect()
    }

    pub fn plain_cuts(&self) -> Vec<SstCliqueCut> {
        self.pairs()
            .into_iter()
            .map(|(l, f)| SstCliqueCut::plain(l, f))
            .collect()
    }

    pub fn num_cuts(&self) -> usize {
        self.rounds.iter().map(|r| r.followers.len()).sum()
    }

    /// Whether the orbits are pairwise disjoint or nested.
    pub fn is_laminar(&self) -> bool {
        is_laminar(&self.rounds.iter().map(|r| r.orbit.clone()).collect::<Vec<_>>())
    }

    pub fn to_json(&self, clique_graph: Option<&Graph>) -> TableJson {
        TableJson {
            n: self.n,
            rounds: self
                .rounds
                .iter()
                .map(|r| RoundJson {
                    leader: r.leader + 1,
                    orbit: one_based(&r.orbit),
                    followers: one_based(&r.followers),
                    cliques: clique_graph.map(|g| {
                        greedy_clique_cover(g, &r.followers)
                            .iter()
                            .map(|c| one_based(c))
                            .collect()
                    }),
                })
                .collect(),
        }
    }

    pub fn from_json(t: &TableJson) -> Result<Self> {
        let zero = |v: &[usize]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&p| {
                    if p == 0 || p > t.n {
                        Err(Error::PointOutOfRange { point: p, n: t.n })
                    } else {
                        Ok(p - 1)
                    }
                })
                .collect()
        };
        let mut rounds: Vec<Round> = Vec::new();
        for r in &t.rounds {
            let leader = zero(&[r.leader])?[0];
            let mut orbit = zero(&r.orbit)?;
            orbit.sort_unstable();
            let followers = zero(&r.followers)?;
            if !orbit.contains(&leader) || followers.iter().any(|f| !orbit.contains(f) || *f == leader) {
                return Err(Error::InvalidInput(format!(
                    "round with leader {} is inconsistent",
                    r.leader
                )));
            }
            let stabilized = rounds.iter().map(|r| r.leader).collect();
            rounds.push(Round {
                leader,
                orbit,
                followers,
                stabilized,
            });
        }
        Ok(SstTable { n: t.n, rounds })
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

/// JSON form of a table, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub rounds: Vec<RoundJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundJson {
    pub leader: usize,
    pub orbit: Vec<usize>,
    pub followers: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cliques: Option<Vec<Vec<usize>>>,
}

pub fn is_laminar(sets: &[Vec<usize>]) -> bool {
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            let inter = a.iter().filter(|x| b.contains(x)).count();
            if inter != 0 && inter != a.len() && inter != b.len() {
                return false;
            }
        }
    }
    true
}

/// One cut per clique of the greedy clique cover of each round's followers.
pub fn sst_clique_cuts(t: &SstTable, g: &Graph) -> Vec<SstCliqueCut> {
    t.rounds
        .iter()
        .flat_map(|r| {
            greedy_clique_cover(g, &r.followers)
                .into_iter()
                .map(move |clique| SstCliqueCut {
                    leader: r.leader,
                    clique,
                })
        })
        .collect()
}

/// Whether the 0/1 vector `x` satisfies `sum_{f in C} x_f <= x_l` for all
/// cuts. Cut indices must be in range of `x`.
pub fn satisfies_cuts(x: &[u8], cuts: &[SstCliqueCut]) -> bool {
    cuts.iter().all(|c| {
        let lhs: u32 = c.clique.iter().map(|&f| x[f] as u32).sum();
        lhs <= x[c.leader] as u32
    })
}

/// Same predicate for a member set instead of an indicator vector.
pub fn set_satisfies_cuts(n: usize, members: &[usize], cuts: &[SstCliqueCut]) -> bool {
    let mut x = vec![0u8; n];
    for &v in members {
        x[v] = 1;
    }
    satisfies_cuts(&x, cuts)
}
