use super::SstTable;
use crate::error::{Error, Result};
use crate::perm::{GeneratorSet, Permutation};

/// Maps a 0/1 vector into its group orbit so that it satisfies the table's
/// plain cuts. The objective value is unchanged for any weights invariant
/// under the group.
pub fn repair_solution(x: &[u8], gens: &GeneratorSet, t: &SstTable) -> Result<Vec<u8>> {
    repair_with_witness(x, gens, t).map(|(y, _)| y)
}

/// Like [`repair_solution`], also returning the group element `g` with
/// `g(x) = x'`.
///
/// Round by round: take the largest entry of the current vector on the
/// recorded orbit (smallest index on ties), move it onto the leader with an
/// element of the group the orbit was computed under, and continue in the
/// stabilizer.
pub fn repair_with_witness(
    x: &[u8],
    gens: &GeneratorSet,
    t: &SstTable,
) -> Result<(Vec<u8>, Permutation)> {
    let n = gens.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if t.n != n {
        return Err(Error::TableMismatch(format!("table has {} points, group has {n}", t.n)));
    }
    if let Some((position, &value)) = x.iter().enumerate().find(|(_, &v)| v > 1) {
        return Err(Error::NotBinary {
            position,
            value: value as i64,
        });
    }
    let mut y = x.to_vec();
    let mut total = Permutation::identity(n);
    for r in &t.rounds {
        let best = r.orbit.iter().map(|&i| y[i]).max().unwrap_or(0);
        let argmax = *r.orbit.iter().find(|&&i| y[i] == best).expect("non-empty orbit");
        if argmax == r.leader {
            continue;
        }
        let group = gens.pointwise_stabilizer(&r.stabilized)?;
        let g = group.element_mapping(argmax, r.leader)?.ok_or_else(|| {
            Error::TableMismatch(format!(
                "no group element maps {} to leader {}",
                argmax + 1,
                r.leader + 1
            ))
        })?;
        y = g.apply_to_vector(&y)?;
        total = g.compose(&total);
    }
    Ok((y, total))
}
