use polefiber::cli::report::render_search;
use polefiber::experiments::{random_search, SearchConfig};

fn main() -> polefiber::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let config = SearchConfig {
        num_plants: args.first().copied().unwrap_or(4),
        targets_per_plant: args.get(1).copied().unwrap_or(3),
        seed: 11,
        ..SearchConfig::default()
    };
    let report = random_search(&config)?;
    print!("{}", render_search(&report));
    println!("runtime {:.2?}", report.runtime);
    Ok(())
}
