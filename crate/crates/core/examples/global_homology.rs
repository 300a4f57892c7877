//! H_*(Φ(X)) against normalized simplicial homology.
//!
//! ```text
//! cargo run --release --example global_homology -- "product:(sphere:1,sphere:1)" 3
//! ```

use derham::builder::build;
use derham::phi_global::homology_run;

fn main() -> derham::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spaces: Vec<String> = match args.first() {
        Some(s) => vec![s.clone()],
        None => ["delta:2", "boundary:3", "sphere:2", "product:(sphere:1,sphere:1)"].map(String::from).to_vec(),
    };
    for space in spaces {
        let x = build(&space)?;
        let d = match args.get(1) {
            Some(d) => d.parse().expect("weight bound"),
            None => x.top_dim().unwrap_or(0) as u32 + 1,
        };
        let r = homology_run(&space, &x, d, 2)?;
        println!(
            "{space:30} D={d}  dim G_D {:?}  image {:?}  N_* {:?}  match {}",
            r.dims_gd,
            r.stable,
            r.n_dims,
            r.matches()
        );
    }
    Ok(())
}
