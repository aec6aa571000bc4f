//! Completing colorings of paths from their endpoint color sets.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::ColorSet;
use crate::error::{Error, Result};
use crate::rational::{ceil_to_int, Rational};

fn pre(msg: impl Into<String>) -> Error {
    Error::PathPrecondition(msg.into())
}

fn scaled(n: usize, q: &Rational) -> Rational {
    Rational::from_integer(BigInt::from(n)) * q
}

fn size(n: usize, q: &Rational) -> usize {
    ceil_to_int(&scaled(n, q)).to_usize().expect("size fits")
}

fn check_palette(n: usize, sets: &[&ColorSet]) -> Result<()> {
    if n == 0 {
        return Err(pre("N must be positive"));
    }
    for set in sets {
        if let Some(c) = set.iter().find(|&&c| c == 0 || c as usize > n) {
            return Err(pre(format!("color {c} outside 1..={n}")));
        }
    }
    Ok(())
}

fn check_edges(f: &[Rational]) -> Result<()> {
    for (i, pair) in f.windows(2).enumerate() {
        if &pair[0] + &pair[1] > Rational::one() {
            return Err(pre(format!("demands on path edge {i} sum above 1")));
        }
    }
    Ok(())
}

fn check_size(set: &ColorSet, n: usize, q: &Rational, exact: bool, name: &str) -> Result<()> {
    let have = Rational::from_integer(BigInt::from(set.len()));
    let need = scaled(n, q);
    if have < need || (exact && have != need) {
        let rel = if exact { "exactly" } else { "at least" };
        return Err(pre(format!("endpoint {name} has {} colors, needs {rel} {need}", set.len())));
    }
    Ok(())
}

/// Colors the middle vertex of a path `x y z` given `psi(x)` and `psi(z)`.
///
/// `f = [f(x), f(y), f(z)]`. A set for `y` exists exactly when
/// `|psi(x) ∪ psi(z)| <= (1 - f(y))·N`; the smallest `ceil(N·f(y))` free
/// colors are returned.
pub fn extend_path_p3(
    x_colors: &ColorSet,
    z_colors: &ColorSet,
    f: &[Rational; 3],
    n: usize,
) -> Result<Option<ColorSet>> {
    check_palette(n, &[x_colors, z_colors])?;
    check_edges(f)?;
    check_size(x_colors, n, &f[0], false, "x")?;
    check_size(z_colors, n, &f[2], false, "z")?;

    let union: ColorSet = x_colors.union(z_colors).copied().collect();
    let bound = scaled(n, &(Rational::one() - &f[1]));
    if Rational::from_integer(BigInt::from(union.len())) > bound {
        return Ok(None);
    }
    let need = size(n, &f[1]);
    let middle: ColorSet = (1..=n as u32)
        .filter(|c| !union.contains(c))
        .take(need)
        .collect();
    debug_assert_eq!(middle.len(), need);
    Ok(Some(middle))
}

/// Colors the inner vertices of a path `x v y z` given `psi(x)` and
/// `psi(z)`.
///
/// `f = [f(x), f(v), f(y), f(z)]`, `N` must be a common denominator of the
/// path demands, and the endpoint sets must have exactly `N·f` colors.
/// Under these conditions an extension exists exactly when
/// `|psi(x) ∩ psi(z)| <= (1 - f(v) - f(y))·N`. Returns the lexicographically
/// least `psi(v)`, then the least `psi(y)` compatible with it.
pub fn extend_path_p4(
    x_colors: &ColorSet,
    z_colors: &ColorSet,
    f: &[Rational; 4],
    n: usize,
) -> Result<Option<(ColorSet, ColorSet)>> {
    check_palette(n, &[x_colors, z_colors])?;
    check_edges(f)?;
    if f.iter().any(|q| !scaled(n, q).is_integer()) {
        return Err(pre(format!("{n} is not a common denominator of the path demands")));
    }
    check_size(x_colors, n, &f[0], true, "x")?;
    check_size(z_colors, n, &f[3], true, "z")?;

    let shared = x_colors.intersection(z_colors).count();
    let bound = scaled(n, &(Rational::one() - &f[1] - &f[2]));
    if Rational::from_integer(BigInt::from(shared)) > bound {
        return Ok(None);
    }

    let need_v = size(n, &f[1]);
    let need_y = size(n, &f[2]);
    // v draws from colors outside psi(x); y from colors outside psi(z).
    // Colors in neither endpoint are contested, so v may take at most
    // (free + only_x - need_y) of them.
    let only_x = x_colors.difference(z_colors).count();
    let free = n + shared - x_colors.len() - z_colors.len();
    let mut contested_budget = (free + only_x)
        .checked_sub(need_y)
        .expect("bound guarantees room for y");
    let allowed: Vec<(u32, bool)> = (1..=n as u32)
        .filter(|c| !x_colors.contains(c))
        .map(|c| (c, !z_colors.contains(&c)))
        .collect();
    let mut v_set = ColorSet::new();
    for (i, &(c, contested)) in allowed.iter().enumerate() {
        if v_set.len() == need_v {
            break;
        }
        if contested && contested_budget == 0 {
            continue;
        }
        // taking c must leave enough admissible colors to finish
        let budget_after = contested_budget - contested as usize;
        let rest = &allowed[i + 1..];
        let only_z_rest = rest.iter().filter(|(_, contested)| !contested).count();
        let contested_rest = rest.len() - only_z_rest;
        if only_z_rest + contested_rest.min(budget_after) >= need_v - v_set.len() - 1 {
            v_set.insert(c);
            contested_budget = budget_after;
        }
    }
    debug_assert_eq!(v_set.len(), need_v);
    let y_set: ColorSet = (1..=n as u32)
        .filter(|c| !z_colors.contains(c) && !v_set.contains(c))
        .take(need_y)
        .collect();
    debug_assert_eq!(y_set.len(), need_y);
    Ok(Some((v_set, y_set)))
}
