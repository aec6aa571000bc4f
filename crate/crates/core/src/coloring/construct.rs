use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{color_range, verify_set_coloring, ColorSet, SetColoring, Verification, Violation};
use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::lp::{DemandFunction, LpSolution};
use crate::rational::{common_denominator, Rational};

/// Turns a FRACC solution of value at most one into an `(f, N)`-coloring.
///
/// `N` is the least common denominator of the demands and the support
/// weights. The support sets, in the order given, receive consecutive blocks
/// of `N·x(I)` colors, and each vertex gets the union of the blocks of the
/// sets containing it.
pub fn lp_to_set_coloring(
    g: &Graph,
    f: &DemandFunction,
    sol: &LpSolution,
) -> Result<SetColoring> {
    f.check_graph(g)?;
    if sol.value > Rational::one() {
        return Err(Error::ValueExceedsOne(sol.value.clone()));
    }
    if let Some((set, _)) = sol.support.iter().find(|(set, _)| !g.is_independent(*set)) {
        return Err(Error::NotIndependent(*set));
    }
    let n = common_denominator(
        f.as_slice()
            .iter()
            .chain(sol.support.iter().map(|(_, x)| x)),
    );
    let n_colors = n.to_u32().ok_or(Error::PaletteTooLarge(usize::MAX))?;
    let n_rat = Rational::from_integer(n);

    let mut psi = vec![ColorSet::new(); g.n()];
    let mut prefix = Rational::zero();
    for (set, x) in &sol.support {
        let start = (&n_rat * &prefix).to_integer() + BigInt::one();
        prefix += x;
        let end = (&n_rat * &prefix).to_integer();
        let block = color_range(
            start.to_u32().expect("block inside 1..=N"),
            end.to_u32().expect("block inside 1..=N"),
        );
        for v in members(*set) {
            psi[v].extend(block.iter().copied());
        }
    }
    let coloring = SetColoring::new(n_colors as usize, psi);
    match verify_set_coloring(g, f, &coloring)? {
        Verification::Accept => Ok(coloring),
        Verification::Reject(Violation::Size { vertex, .. }) => Err(Error::DemandNotCovered(vertex)),
        Verification::Reject(Violation::Conflict { edge, .. }) => {
            unreachable!("blocks of independent sets cannot conflict on edge {edge:?}")
        }
    }
}

/// Replaces each color `i` of an `N`-coloring by the block
/// `(i-1)·M/N + 1 ..= i·M/N`.
pub fn refine_coloring(c: &SetColoring, m: usize) -> Result<SetColoring> {
    let n = c.n_colors();
    if n == 0 || m == 0 || !m.is_multiple_of(n) {
        return Err(Error::NotMultiple { m, n });
    }
    let k = (m / n) as u32;
    let psi = c
        .psi()
        .iter()
        .map(|set| {
            set.iter()
                .flat_map(|&i| (i - 1) * k + 1..=i * k)
                .collect()
        })
        .collect();
    Ok(SetColoring::new(m, psi))
}
