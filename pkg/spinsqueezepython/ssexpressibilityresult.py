# external package imports.
import numpy as np

# auto-generate the "__all__" variable with classes decorated with "@export".
from .ssutils import export, JsonHelper


@export
class SSExpressibilityResult:
    """
    Kullback-Leibler divergence (in nats) between the sampled fidelity distribution
    of a circuit family and the Haar-random fidelity distribution.

    Threadsafety:
        Instances are treated as immutable values.
    """

    def __init__(self, nQubits:int, klDivergence:float, counts:np.ndarray, haarMasses:np.ndarray, seed=None) -> None:
        """
        Initializes a new instance of the class.

        Args:
            nQubits (int):
                Number of qubits N.
            klDivergence (float):
                Divergence in nats (>= 0).
            counts (np.ndarray):
                Fidelity histogram counts over equal bins on [0, 1].
            haarMasses (np.ndarray):
                Haar probability of every bin.
            seed (object):
                Seed the fidelities were sampled with, if any.
        """
        self._fNumQubits:int = int(nQubits)
        self._fKlDivergence:float = float(klDivergence)
        self._fCounts:np.ndarray = np.asarray(counts, dtype=np.int64)
        self._fHaarMasses:np.ndarray = np.asarray(haarMasses, dtype=float)
        self._fSeed = seed


    def __repr__(self) -> str:
        return "SSExpressibilityResult(N={0}, kl={1:.6f}, samples={2}, bins={3})".format(
            self._fNumQubits, self._fKlDivergence, self.NumSamples, self.NumBins)


    @property
    def Counts(self) -> np.ndarray:
        """ Gets the histogram counts. """
        return self._fCounts

    @property
    def HaarMasses(self) -> np.ndarray:
        """ Gets the Haar probability of every bin. """
        return self._fHaarMasses

    @property
    def KlDivergence(self) -> float:
        """ Gets the divergence in nats. """
        return self._fKlDivergence

    @property
    def NumBins(self) -> int:
        """ Gets the number of histogram bins. """
        return int(self._fCounts.shape[0])

    @property
    def NumQubits(self) -> int:
        """ Gets the number of qubits N. """
        return self._fNumQubits

    @property
    def NumSamples(self) -> int:
        """ Gets the number of sampled fidelities. """
        return int(self._fCounts.sum())

    @property
    def Seed(self):
        """ Gets the sampling seed. """
        return self._fSeed


    def HistogramRows(self) -> list:
        """
        Returns (bin_low, bin_high, count, probability, haar_probability) rows for csv output.
        """
        edges = np.linspace(0.0, 1.0, self.NumBins + 1)
        total:int = max(self.NumSamples, 1)
        return [(float(edges[i]), float(edges[i + 1]), int(self._fCounts[i]), self._fCounts[i] / total, float(self._fHaarMasses[i]))
                for i in range(self.NumBins)]


    def ToDictionary(self) -> dict:
        """
        Returns a json-friendly dictionary of the result.
        """
        return {
            "n_qubits": self._fNumQubits,
            "kl_divergence": JsonHelper.ToJsonValue(self._fKlDivergence),
            "n_samples": self.NumSamples,
            "n_bins": self.NumBins,
            "histogram": JsonHelper.ToJsonValue(self._fCounts),
            "seed": JsonHelper.ToJsonValue(self._fSeed),
        }
