//! Q-system relations D(l, lambda + l w_i) = D(l, mu) + D(l+1, lambda + l w_i).

use alcove::demchar::{verify_qsystem, CharacterCache};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let cache = CharacterCache::in_memory();
    let cases: &[(&str, i64, &[i64], usize)] = &[
        ("A2^1", 1, &[1, 0], 1),
        ("A2^1", 2, &[1, 1], 2),
        ("A3^1", 1, &[0, 0, 1], 3),
        ("D4^1", 1, &[0, 0, 0, 1], 4),
    ];
    for (label, level, w, i) in cases {
        let rs = RootSystemData::from_label_str(label)?;
        let rep = verify_qsystem(&cache, &rs, *level, &FiniteWeight::from_ints(w), *i)?;
        println!("{label} i={i}: {rep}\n");
    }
    Ok(())
}
