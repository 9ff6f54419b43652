//! The sinc power of the unit translation is not a translation: applied to the box on
//! `[0, 1/2]` it vanishes on `(1/2, 1)` for every `t`. Refining the generator to `T_{1/k}`
//! recovers the true shift as `k` grows.

use fracterp::frfrt::{refined_translation_power, translation_counterexample, Signal};

fn main() -> fracterp::Result<()> {
    for t in [0.25, 0.5, 0.75] {
        let (report, _) = translation_counterexample(t, 64)?;
        println!(
            "t = {t}: max on (1/2, 1) {:.1e} (true shift {:.1}), L² error {:.3}",
            report.max_on_interval, report.true_shift_on_interval, report.l2_error
        );
    }

    let t = 1.0 / 3.0;
    let gaussian = Signal::from_real_fn(1025, 1.0 / 64.0, |x| (-std::f64::consts::PI * x * x).exp())?;
    let shifted = Signal::from_real_fn(1025, 1.0 / 64.0, |x| (-std::f64::consts::PI * (x - t).powi(2)).exp())?;
    for k in [1, 2, 4, 8] {
        let out = refined_translation_power(&gaussian, t, k)?;
        println!("Gaussian, t = 1/3, k = {k}: L² error {:.2e}", out.l2_distance(&shifted));
    }
    Ok(())
}
