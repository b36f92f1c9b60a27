use std::collections::BTreeSet;

use super::{OrbitRule, Round, SstTable};
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, Orbit};

pub const DEFAULT_MAX_ROUNDS: usize = 50;

/// Nontrivial orbit picked by `rule`; ties go to the orbit holding the
/// smallest point.
fn choose_orbit(orbits: Vec<Orbit>, rule: OrbitRule) -> Option<Orbit> {
    let nontrivial = orbits.into_iter().filter(|o| o.len() > 1);
    match rule {
        OrbitRule::Min => nontrivial.min_by_key(|o| (o.len(), o.smallest())),
        OrbitRule::Max => nontrivial.min_by_key(|o| (std::cmp::Reverse(o.len()), o.smallest())),
    }
}

fn round(leader: usize, orbit: Vec<usize>, stabilized: Vec<usize>) -> Round {
    let followers = orbit.iter().copied().filter(|&f| f != leader).collect();
    Round {
        leader,
        orbit,
        followers,
        stabilized,
    }
}

/// Union of the inclusionwise maximal orbits among `rounds` that do not
/// contain `leader`.
fn maximal_orbits_avoiding(rounds: &[Round], leader: usize) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for (i, r) in rounds.iter().enumerate() {
        let dominated = rounds.iter().enumerate().any(|(j, s)| {
            j != i
                && s.orbit.len() >= r.orbit.len()
                && r.orbit.iter().all(|x| s.orbit.binary_search(x).is_ok())
                && (s.orbit.len() > r.orbit.len() || j < i)
        });
        if !dominated && r.orbit.binary_search(&leader).is_err() {
            out.extend(r.orbit.iter().copied());
        }
    }
    out.into_iter().collect()
}

/// Points the stringent group for the next leader must fix: all previous
/// leaders plus the maximal previous orbits not containing `leader`.
fn stringent_fixed(rounds: &[Round], leader: usize) -> Vec<usize> {
    let mut fixed: BTreeSet<usize> = rounds.iter().map(|r| r.leader).collect();
    fixed.extend(maximal_orbits_avoiding(rounds, leader));
    fixed.into_iter().collect()
}

/// Plain table: each round takes the nontrivial orbit of minimum or maximum
/// size, its smallest point as leader, then moves to the stabilizer of that
/// leader. Stops when the group is trivial or after `max_rounds` rounds.
pub fn build_sst_table(gens: &GeneratorSet, rule: OrbitRule, max_rounds: usize) -> Result<SstTable> {
    let mut table = SstTable::empty(gens.n());
    let mut current = gens.clone();
    let mut leaders = Vec::new();
    while table.rounds.len() < max_rounds && !current.is_trivial() {
        let Some(orbit) = choose_orbit(current.orbits(), rule) else {
            break;
        };
        let leader = orbit.smallest();
        table.rounds.push(round(leader, orbit.members, leaders.clone()));
        leaders.push(leader);
        current = current.pointwise_stabilizer(&[leader])?;
    }
    Ok(table)
}

/// Stringent table with depth-first leader order: once a leader is chosen,
/// the following leaders are drawn (in index order) from its orbit until it
/// is exhausted; only then is a fresh orbit picked by `rule`. Each orbit is
/// computed under the group fixing the previous leaders and the maximal
/// previous orbits not containing the new leader.
pub fn build_stringent_sst_table(
    gens: &GeneratorSet,
    rule: OrbitRule,
    max_rounds: usize,
) -> Result<SstTable> {
    let n = gens.n();
    let mut table = SstTable::empty(n);
    let mut considered = vec![false; n];
    let mut stack: Vec<Vec<usize>> = Vec::new();
    if gens.is_trivial() {
        return Ok(table);
    }
    while table.rounds.len() < max_rounds {
        let mut candidate = None;
        while let Some(top) = stack.last() {
            if let Some(&c) = top.iter().find(|&&c| !considered[c]) {
                candidate = Some(c);
                break;
            }
            stack.pop();
        }
        match candidate {
            Some(c) => {
                considered[c] = true;
                let fixed = stringent_fixed(&table.rounds, c);
                let group = gens.pointwise_stabilizer(&fixed)?;
                let orbit = group.orbit(c)?;
                if orbit.len() > 1 {
                    stack.push(orbit.members.clone());
                    table.rounds.push(round(c, orbit.members, fixed));
                }
            }
            None => {
                let mut fixed: BTreeSet<usize> = table.rounds.iter().map(|r| r.leader).collect();
                for r in &table.rounds {
                    fixed.extend(r.orbit.iter().copied());
                }
                let fixed: Vec<usize> = fixed.into_iter().collect();
                let group = gens.pointwise_stabilizer(&fixed)?;
                let Some(orbit) = choose_orbit(group.orbits(), rule) else {
                    break;
                };
                let leader = orbit.smallest();
                considered[leader] = true;
                stack.push(orbit.members.clone());
                table.rounds.push(round(leader, orbit.members, fixed));
            }
        }
    }
    Ok(table)
}

impl SstTable {
    /// Table for an explicit leader sequence. Plain tables compute each
    /// orbit under the stabilizer of the previous leaders; stringent ones
    /// additionally fix the maximal previous orbits not containing the leader.
    pub fn with_leaders(gens: &GeneratorSet, leaders: &[usize], stringent: bool) -> Result<SstTable> {
        let mut table = SstTable::empty(gens.n());
        for &leader in leaders {
            if leader >= gens.n() {
                return Err(Error::PointOutOfRange {
                    point: leader + 1,
                    n: gens.n(),
                });
            }
            let fixed = if stringent {
                stringent_fixed(&table.rounds, leader)
            } else {
                table.rounds.iter().map(|r| r.leader).collect()
            };
            let orbit = gens.pointwise_stabilizer(&fixed)?.orbit(leader)?;
            table.rounds.push(round(leader, orbit.members, fixed));
        }
        Ok(table)
    }
}

/// Recomputes every orbit under the stringent group and compares with the
/// recorded one.
pub fn is_stringent(t: &SstTable, gens: &GeneratorSet) -> Result<bool> {
    if t.n != gens.n() {
        return Err(Error::TableMismatch(format!(
            "table has {} points, group has {}",
            t.n,
            gens.n()
        )));
    }
    let mut ok = true;
    for (i, r) in t.rounds.iter().enumerate() {
        if r.leader >= t.n {
            return Err(Error::TableMismatch(format!("leader {} out of range", r.leader + 1)));
        }
        let prev: Vec<usize> = t.rounds[..i].iter().map(|r| r.leader).collect();
        let plain = gens.pointwise_stabilizer(&prev)?.orbit(r.leader)?;
        if r.orbit.iter().any(|x| !plain.contains(*x)) {
            return Err(Error::TableMismatch(format!(
                "orbit of leader {} is not contained in its orbit under the stabilizer of the previous leaders",
                r.leader + 1
            )));
        }
        let fixed = stringent_fixed(&t.rounds[..i], r.leader);
        let expected = gens.pointwise_stabilizer(&fixed)?.orbit(r.leader)?;
        ok &= expected.members == r.orbit;
    }
    Ok(ok)
}
