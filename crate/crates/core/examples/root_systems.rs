//! Finite data behind a few affine labels.
//!
//! cargo run --example root_systems -- E6^2

use alcove::rational::fmt_coords;
use alcove::RootSystemData;

fn main() -> alcove::Result<()> {
    let labels: Vec<String> = std::env::args().skip(1).collect();
    let labels = if labels.is_empty() {
        ["A2^1", "G2^1", "A4^2", "D4^3", "E6^2"].map(String::from).to_vec()
    } else {
        labels
    };
    for l in labels {
        let rs = RootSystemData::from_label_str(&l)?;
        println!("{} -> finite type {}", rs.label, rs.finite_type);
        println!("  cartan        {:?}", rs.cartan);
        println!("  |Phi+|        {}", rs.num_positive_roots());
        println!("  theta         {:?} (a0 = {})", rs.theta, rs.a0);
        println!("  <a_i,a_i>     {}", fmt_coords(&rs.root_norms));
        println!("  w0            {:?}", rs.w0_word);
    }
    Ok(())
}
