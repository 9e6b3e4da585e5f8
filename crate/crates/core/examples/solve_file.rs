use std::path::PathBuf;

use polefiber::cli::files::{resolve_target, SystemFile};
use polefiber::cli::report::{render_solve, solve_report, SolveContext};
use polefiber::homotopy::{solve_system, TrackerConfig};
use polefiber::polemap::{build_fiber_system, FiberMode};

fn main() -> polefiber::Result<()> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut args = std::env::args().skip(1);
    let system = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| data.join("state_space_2x2.json"));
    let target = args.next().unwrap_or_else(|| "-1,-2,-3,-4".to_string());

    let file = SystemFile::read(&system)?;
    let plant = file.to_plant()?;
    let target = resolve_target(&target)?;
    let fiber = build_fiber_system(&plant, &target, FiberMode::CoeffMatch)?;
    let cfg = TrackerConfig::default();
    let set = solve_system(&fiber.system, &cfg)?;
    let ctx = SolveContext {
        name: file.name.clone(),
        m: plant.m,
        p: plant.p,
        n: plant.n,
        target: &target,
        mode: FiberMode::CoeffMatch,
    };
    print!("{}", render_solve(&solve_report(&ctx, &set, &cfg)));
    Ok(())
}
