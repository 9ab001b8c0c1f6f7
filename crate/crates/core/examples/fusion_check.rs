//! Classical characters of D(l, lambda) against its fusion factors.

use alcove::demchar::{verify_fusion, CharacterCache};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let cache = CharacterCache::in_memory();
    let cases: &[(&str, i64, &[i64])] = &[
        ("A1^1", 1, &[2]),
        ("A1^1", 2, &[5]),
        ("A2^1", 2, &[3, 2]),
        ("A3^1", 2, &[2, 1, 1]),
        ("D4^1", 2, &[1, 0, 2, 0]),
    ];
    let mut ok = true;
    for (label, level, w) in cases {
        let rs = RootSystemData::from_label_str(label)?;
        let rep = verify_fusion(&cache, &rs, *level, &FiniteWeight::from_ints(w), None)?;
        ok &= rep.passed();
        println!("{label:5} {rep}");
    }
    if !ok {
        std::process::exit(1);
    }
    Ok(())
}
