//! Graded character of D(l, lambda).
//!
//! cargo run --example demazure_character -- A3^1 1 1,0,1

use alcove::demchar::{demazure_character, weyl_dimension, Grading};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "A2^1".into());
    let level: i64 = args.next().map_or(1, |s| s.parse().expect("level"));
    let weight = args.next().unwrap_or_else(|| "2,0".into());
    let rs = RootSystemData::from_label_str(&label)?;
    let lam = FiniteWeight::parse(&weight)?;

    let f = demazure_character(&rs, level, &lam)?;
    let g = f.graded(Grading::Current);
    println!("D({level}, [{lam}]) in {label}");
    println!("  dimension {} (dim V(lambda) = {})", f.dimension(), weyl_dimension(&rs, &lam)?);
    println!("  layer dimensions {:?}", g.hilbert_series());
    println!("  {g}");
    Ok(())
}
