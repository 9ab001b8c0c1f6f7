//! Canonical decompositions in simply-laced types and validation of explicit
//! coweight decompositions elsewhere.

use alcove::steinberg::{canonical_decomposition, fundamental_coweight, validate_decomposition};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let a2 = RootSystemData::from_label_str("A2^1")?;
    let lam = FiniteWeight::from_ints(&[5, 2]);
    let d = canonical_decomposition(&a2, 2, &lam)?;
    let parts: Vec<String> = d.parts.iter().map(|p| format!("[{p}]")).collect();
    println!("A2: [{lam}] = 2 * ({}) + [{}]", parts.join(" + "), d.remainder);

    let c2 = RootSystemData::from_label_str("C2^1")?;
    let lam = FiniteWeight::from_ints(&[4, 2]);
    let parts = [fundamental_coweight(&c2, 1), fundamental_coweight(&c2, 2)];
    let ok = validate_decomposition(&c2, 2, &parts, &FiniteWeight::zero(2), &lam);
    println!("C2: [4,2] = 2 * ([{}] + [{}]): {ok:?}", parts[0], parts[1]);

    let bad = [FiniteWeight::from_ints(&[1, 0])];
    let err = validate_decomposition(&c2, 2, &bad, &FiniteWeight::from_ints(&[2, 2]), &lam);
    println!("C2 with part omega_1: {err:?}");
    Ok(())
}
