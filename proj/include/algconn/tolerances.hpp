#pragma once

namespace algconn {

// Numeric thresholds shared by the spectral, Perron and extremal code. The
// defaults are the documented ones; the CLI exposes each as a flag.
struct Tolerances {
  // Eigenvalues within this absolute distance of mu count toward its multiplicity.
  double multiplicity = 1e-9;
  // A Laplacian whose second eigenvalue is below this is treated as disconnected.
  double disconnection = 1e-9;
  // Fiedler coordinates with |Y(v)| <= zero_relative * max|Y| are zero.
  double zero_relative = 1e-8;
  // Components whose Perron value is within this relative gap of the maximum
  // are all Perron components.
  double perron_relative = 1e-9;
  // Two graphs tie in an extremal search when their mu differ by at most this.
  double tie = 1e-9;
};

}  // namespace algconn
