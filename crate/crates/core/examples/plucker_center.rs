use polefiber::experiments::CounterexampleData;
use polefiber::plucker::{center_subspace, feedback_block};
use polefiber::ratpoly::{rat, RatMatrix};

fn main() -> polefiber::Result<()> {
    let data = CounterexampleData::load()?;
    let sys = data.plucker()?;
    println!("m = {}, p = {}, n = {}, {} Plücker coordinates", sys.m, sys.p, sys.n, sys.subsets.len());
    for (alpha, g) in sys.subsets.iter().zip(&sys.g) {
        println!("  g{:?} = {}", alpha.members, g.pretty("s"));
    }

    let center = center_subspace(&sys);
    println!(
        "coefficient rank {}, dim E = {} (expected {}), full span: {}",
        center.rank,
        center.dim_e,
        center.expected_dim(),
        center.has_full_span()
    );

    // Σ g_α k_α equals the block determinant for any gain.
    let k = RatMatrix::from_rows(
        (0..sys.m)
            .map(|i| (0..sys.p).map(|j| rat(i as i64 - 2 * j as i64, 3)).collect())
            .collect(),
    )?;
    let plant = data.plant()?;
    let mfd = plant.mfd.as_ref().expect("fraction form");
    let expanded = sys.closed_loop(&k)?;
    let block = feedback_block(&mfd.d, &mfd.n, &k)?.det()?;
    println!("expansion equals block determinant: {}", expanded == block);
    println!("  {}", expanded.pretty("s"));
    Ok(())
}
