//! Development probe: route-2 PRS timing.

use std::time::Instant;

use cyclogon_core::derive::{self, P_VARS};
use cyclogon_core::poly::{resultant_subresultant_traced, MultiPoly};

fn main() {
    let x_idx = MultiPoly::index_of(P_VARS, "X");
    let septic = derive::debug_septic();
    let t = Instant::now();
    let relation2 = derive::debug_area_relation_route2();
    let raw_y2 = resultant_subresultant_traced(&septic, &relation2, x_idx, &mut |deg, terms| {
        println!("  [{:?}] PRS2 level: deg {deg} max coeff terms {terms}", t.elapsed());
    })
    .unwrap();
    println!("[{:?}] robbins route-2 PRS done", t.elapsed());
    let y_idx = MultiPoly::index_of(P_VARS, "Y");
    println!(
        "raw route2: {} terms, degree {} in Y",
        raw_y2.num_terms(),
        raw_y2.degree_in(y_idx)
    );
    for (k, c) in raw_y2.coeffs_in(y_idx).iter().enumerate() {
        if !c.is_zero() {
            println!("  Y^{k}: {} terms", c.num_terms());
        }
    }
}
