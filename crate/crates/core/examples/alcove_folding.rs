//! Fold a rational point into the fundamental alcove and check the word
//! against the separating hyperplane count.
//!
//! cargo run --example alcove_folding -- C3^1 5/2,-1,1/3

use alcove::afweyl::{fold_to_alcove, separating_count, LexPoint};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "G2^1".into());
    let point = args.next().unwrap_or_else(|| "7/3,-1".into());
    let rs = RootSystemData::from_label_str(&label)?;
    let x = FiniteWeight::parse(&point)?;
    rs.check_rank(&x)?;

    let p = LexPoint::perturbed(&rs, x.clone());
    let a = fold_to_alcove(&rs, &p)?;
    let d = separating_count(&rs, &LexPoint::interior(&rs), &p)?;
    println!("{label}: x = [{x}]");
    println!("  word            {:?}", a.word);
    println!("  length          {} (separating hyperplanes: {d})", a.word.len());
    println!("  v = t_mu' u     mu' = [{}], u = {:?}", a.mu_prime, a.u.reduced(&rs).word());
    println!("  representative  [{}]", a.representative.base);
    Ok(())
}
