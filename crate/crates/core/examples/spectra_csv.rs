//! Writes a signal, its sequency spectrum and its Fourier magnitudes to CSV
//! files under the system temp directory.

use sequency::signals::{discretize, load_csv, save_csv, save_spectrum_csv, Waveform};
use sequency::walsh::{dft_spectrum, sequency_transform};

pub fn main() -> sequency::Result<()> {
    let dir = std::env::temp_dir().join("sequency-spectra");
    std::fs::create_dir_all(&dir)?;

    for (name, waveform) in Waveform::families() {
        let signal = discretize(&waveform, 7);
        let walsh: Vec<f64> = sequency_transform(signal.values())?
            .iter()
            .map(|x| x.abs())
            .collect();
        let fourier: Vec<f64> = dft_spectrum(&signal)?.iter().map(|c| c.norm()).collect();

        save_csv(dir.join(format!("{name}.csv")), signal.values())?;
        save_spectrum_csv(dir.join(format!("{name}.sequency.csv")), &walsh)?;
        save_spectrum_csv(dir.join(format!("{name}.frequency.csv")), &fourier)?;

        let count = |v: &[f64]| v.iter().filter(|x| **x > 1e-9).count();
        println!(
            "{name:<12} nonzero sequency terms {:3}, nonzero frequency terms {:3}",
            count(&walsh),
            count(&fourier)
        );
        assert_eq!(load_csv(dir.join(format!("{name}.csv")))?, signal.values());
    }
    println!("written to {}", dir.display());
    Ok(())
}
