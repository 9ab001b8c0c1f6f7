//! Dominance certificate w t_mu (l Lambda_0 - lambda) and its verification.
//!
//! cargo run --example steinberg_certificate -- E8^1 4 1,0,0,2,0,0,0,3

use alcove::serial::certificate_to_json;
use alcove::steinberg::{steinberg_certificate, verify_certificate};
use alcove::{FiniteWeight, RootSystemData};

fn main() -> alcove::Result<()> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "E6^2".into());
    let level: i64 = args.next().map_or(3, |s| s.parse().expect("level"));
    let weight = args.next().unwrap_or_else(|| "2,0,1,5".into());
    let rs = RootSystemData::from_label_str(&label)?;
    let lam = FiniteWeight::parse(&weight)?;

    let cert = steinberg_certificate(&rs, level, &lam)?;
    let verdict = verify_certificate(&rs, &cert);
    println!("{}", certificate_to_json(&cert, Some(verdict.is_ok())));
    if let Err(why) = verdict {
        eprintln!("verification failed: {why}");
        std::process::exit(1);
    }
    Ok(())
}
