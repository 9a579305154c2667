//! Named diamonds.
//!
//! The `110r` and `321s` tables are sheaf-cohomology numbers `h^p(X, Omega^q)`
//! of singular compactifications and carry no symmetry flag. `I` and `J` name
//! the two projectivisations compared in each table.

use super::{diamond_pn_pn_dual, Entry, HodgeDiamond};
use crate::error::{Error, Result};

const U: Option<u64> = None;

fn rows(spec: &[&[Option<u64>]]) -> Vec<Vec<Entry>> {
    spec.iter().map(|r| r.iter().map(|e| e.map_or(Entry::Unknown, Entry::Known)).collect()).collect()
}

fn k(v: &[u64]) -> Vec<Option<u64>> {
    v.iter().map(|&x| Some(x)).collect()
}

/// Five-dimensional comparison table with the given middle row and with rows
/// 4 and 6 overridden by `side`.
fn fivefold(middle: [Option<u64>; 6], side: Option<[Option<u64>; 5]>) -> HodgeDiamond {
    let mut r: Vec<Vec<Option<u64>>> = vec![
        k(&[1]),
        k(&[0, 0]),
        k(&[0, 1, 0]),
        k(&[0, 0, 0, 0]),
        k(&[0, 0, 1, 0, 0]),
        middle.to_vec(),
        k(&[0, 0, 1, 0, 0]),
        k(&[0, 0, 0, 0]),
        k(&[0, 1, 0]),
        k(&[0, 0]),
        k(&[1]),
    ];
    if let Some(s) = side {
        r[4] = s.to_vec();
        r[6] = s.to_vec();
    }
    let refs: Vec<&[Option<u64>]> = r.iter().map(|x| x.as_slice()).collect();
    HodgeDiamond::from_rows(rows(&refs)).expect("well-formed fixture")
}

pub fn fixture_names() -> &'static [&'static str] {
    &["sl2hodge", "sl2rfibre", "sl3orbit", "sl3fibre", "110r-I", "110r-J", "321s-I", "321s-J", "k3"]
}

pub fn fixture(name: &str) -> Option<HodgeDiamond> {
    let symmetric = |r: &[&[u64]]| HodgeDiamond::from_known_rows(r).and_then(HodgeDiamond::smooth_symmetric).ok();
    let side = Some([Some(0), Some(0), U, Some(0), Some(0)]);
    match name {
        "sl2hodge" => symmetric(&[&[1], &[0, 0], &[0, 2, 0], &[0, 0], &[1]]),
        "sl2rfibre" => symmetric(&[&[1], &[0, 0], &[1]]),
        "sl3orbit" => symmetric(&[
            &[1],
            &[0, 0],
            &[0, 2, 0],
            &[0, 0, 0, 0],
            &[0, 0, 3, 0, 0],
            &[0, 0, 0, 0],
            &[0, 2, 0],
            &[0, 0],
            &[1],
        ]),
        "sl3fibre" => symmetric(&[&[1], &[0, 0], &[0, 2, 0], &[0, 0, 0, 0], &[0, 2, 0], &[0, 0], &[1]]),
        "110r-I" => Some(fivefold([Some(0), Some(16), U, U, Some(16), Some(0)], None)),
        "110r-J" => Some(fivefold([Some(0), Some(1), U, U, Some(1), Some(0)], None)),
        "321s-I" => Some(fivefold([Some(0), Some(16), U, U, Some(16), Some(0)], side)),
        "321s-J" => Some(fivefold([Some(0), Some(1), U, U, Some(1), Some(0)], side)),
        "k3" => symmetric(&[&[1], &[0, 0], &[1, 20, 1], &[0, 0], &[1]]),
        _ => None,
    }
}

/// Looks up a fixture name or `pnpnN` (the diamond of `P^N x (P^N)^*`).
pub fn resolve_diamond(name: &str) -> Result<HodgeDiamond> {
    if let Some(n) = name.strip_prefix("pnpn") {
        let n: usize = n.parse().map_err(|_| Error::InvalidSpec(format!("bad diamond name `{name}`")))?;
        return diamond_pn_pn_dual(n);
    }
    fixture(name).ok_or_else(|| {
        Error::InvalidSpec(format!("unknown diamond `{name}`; known: pnpnN, {}", fixture_names().join(", ")))
    })
}
