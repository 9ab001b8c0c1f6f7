//! The translation lattice M and the hyperplane moduli Z_alpha.

use alcove::afweyl::{m_contains, m_lattice_basis, z_alpha_modulus};
use alcove::rational::fmt_q;
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    for l in ["A2^1", "C2^1", "G2^1", "A2^2", "A3^2", "D4^3"] {
        let rs = RootSystemData::from_label_str(l)?;
        let basis: Vec<String> = m_lattice_basis(&rs).iter().map(|b| format!("[{b}]")).collect();
        println!("{l}: M basis {}", basis.join(" "));
        for root in rs.positive_roots.iter().take(4) {
            println!("  Z for {root:?} = {}Z", fmt_q(&z_alpha_modulus(&rs, root)?));
        }
        let w1 = FiniteWeight::fundamental(rs.rank(), 1, 1);
        println!("  omega_1 in M: {}", m_contains(&rs, &w1));
    }
    Ok(())
}
