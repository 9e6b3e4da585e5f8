use polefiber::cli::report::render_poly_rows;
use polefiber::experiments::{shapiro_default_roots, shapiro_matrix, shapiro_verify};
use polefiber::homotopy::TrackerConfig;
use polefiber::polemap::TargetPoly;

fn main() -> polefiber::Result<()> {
    print!("{}", render_poly_rows(&shapiro_matrix(3, 3, None)?, 3));
    println!();
    let cfg = TrackerConfig::default();
    for (m, p) in [(2, 2), (3, 2), (2, 3), (4, 2)] {
        let target = TargetPoly::from_int_roots(&shapiro_default_roots(m * p))?;
        let r = shapiro_verify(m, p, &target, &cfg)?;
        println!(
            "({m},{p}) roots [{}]: {} of {} solutions real, d = {} -> {}",
            r.target_roots.join(", "),
            r.num_real,
            r.num_solutions,
            r.degree,
            if r.passed() { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}
