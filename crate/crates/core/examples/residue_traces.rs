//! Why a prime p divides a Fermat number exactly when the order of 2 mod p
//! is a power of two: trace the sequence 2, 2^2, 2^4, ... mod p and watch
//! where it lands on -1.
//!
//!     cargo run --example residue_traces

use fermat_lab::ntkernel::{order_of_two, residue_trace};
use num_bigint::BigUint;

fn main() -> fermat_lab::Result<()> {
    for p in [641u64, 6_700_417, 274_177, 7, 23] {
        let p = BigUint::from(p);
        let info = order_of_two(&p)?;
        let trace = residue_trace(&p, 64)?;
        print!("p = {p}: ord(2) = {}", info.order);
        match (info.fermat_index, trace.hit_index) {
            (Some(n), Some(r)) => {
                assert_eq!(n, r);
                println!(" = 2^{}, so p | F_{r}", n + 1);
            }
            (None, None) => println!(", not a power of two; p divides no F_n"),
            _ => unreachable!("order and trace must agree"),
        }
        let shown: Vec<String> = trace
            .sequence
            .iter()
            .take(8)
            .map(|r| r.value().to_string())
            .collect();
        println!("  trace: {}{}", shown.join(", "), if trace.cycled { "  (cycles)" } else { "" });
    }
    Ok(())
}
