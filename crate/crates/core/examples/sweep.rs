//! Construct a rate-1/2 length-48 code and sweep three SNR points.

use mkpolar::sim::{run, to_csv, ArithmeticChoice, SimConfig};

fn main() -> mkpolar::Result<()> {
    let seq: mkpolar::KernelSeq = "3,2,2,2,2".parse()?;
    let code = mkpolar::construct_code(&seq, 24, 2.0, 100_000, 1)?;
    let result = run(&SimConfig {
        code,
        rate_match: None,
        ebn0_db: vec![1.0, 2.0, 3.0],
        max_frames: 100_000,
        max_frame_errors: Some(100),
        arithmetic: ArithmeticChoice::Real,
        seed: 1,
        workers: 4,
    })?;
    print!("{}", to_csv(&result));
    Ok(())
}
