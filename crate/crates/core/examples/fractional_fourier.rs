//! The alternate fractional Fourier transform (interpolating the four integer powers of
//! the centered DFT) next to the chirp-based rotation. Writes long-form profile CSV for
//! the box signal to the path given as the first argument, if any.

use fracterp::frfrt::{alt_frft, figure_profiles, literature_frft, unit_box, Signal};
use std::fs::File;

fn main() -> fracterp::Result<()> {
    let m = 256;
    let step = Signal::natural_step(m);
    let gaussian = Signal::from_real_fn(m, step, |x| (-std::f64::consts::PI * x * x).exp())?;

    for alpha in [0.25, 0.5, 1.0] {
        let alt = alt_frft(&gaussian, alpha)?;
        let chirp = literature_frft(&gaussian, alpha * std::f64::consts::FRAC_PI_2)?;
        println!(
            "α = {alpha:<4}  Gaussian: alt change {:.2e}, chirp change {:.2e}, −1 eigenspace share {:.2e}",
            alt.signal.relative_distance(&gaussian),
            chirp.relative_distance(&gaussian),
            alt.minus_one_fraction
        );
    }

    let b = unit_box(m)?;
    let a = alt_frft(&b, 0.5)?;
    let twice = alt_frft(&a.signal, 0.5)?;
    let one = alt_frft(&b, 1.0)?;
    println!(
        "box: ‖F^(1/2)F^(1/2) − F‖ / ‖F‖ = {:.3} (−1 eigenspace share {:.3})",
        twice.signal.relative_distance(&one.signal),
        a.minus_one_fraction
    );

    if let Some(path) = std::env::args().nth(1) {
        let rows = figure_profiles(1024)?;
        fracterp::io::write_profile_csv(File::create(&path)?, &rows)?;
        println!("wrote {} profile rows to {path}", rows.len());
    }
    Ok(())
}
