//! A disk-backed character cache shared across threads.

use alcove::demchar::cache::{list_entries, validate_entries};
use alcove::demchar::CharacterCache;
use alcove::{FiniteWeight, RootSystemData};
use rayon::prelude::*;

fn main() -> alcove::Result<()> {
    let dir = tempfile::tempdir().expect("temp dir");
    let cache = CharacterCache::with_dir(dir.path())?;
    let rs = RootSystemData::from_label_str("A3^1")?;

    let weights: Vec<[i64; 3]> = vec![[1, 0, 0], [0, 1, 0], [1, 1, 0], [2, 0, 1], [1, 0, 1]];
    let dims: Vec<i64> = weights
        .par_iter()
        .map(|w| cache.character(&rs, 1, &FiniteWeight::from_ints(w)).map(|f| f.dimension()))
        .collect::<alcove::Result<_>>()?;
    for (w, d) in weights.iter().zip(&dims) {
        println!("dim D(1, {w:?}) = {d}");
    }

    for e in list_entries(dir.path())? {
        println!("cached {}", e.file_name());
    }
    for (e, v) in validate_entries(dir.path())? {
        println!("{}: {v:?}", e.file_name());
    }
    Ok(())
}
