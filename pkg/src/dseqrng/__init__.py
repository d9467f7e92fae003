"""d-sequence pseudorandom bit generators with exact period analysis."""
from .analysis import (CorrelationSeries, balance, circular_autocorr, linear_autocorr,
                       to_bipolar)
from .dsequence import DSeqConfig, dseq_digit, dseq_period, dseq_stream, verify_half_period_complement
from .errors import (DSeqError, EmptyInputError, InvalidArgumentsError, InvalidModulusError,
                     InvalidPrimeError, NotCoprimeError, NotMaximumLengthError)
from .kak import (KakIndexConfig, KakPowerConfig, kak_index_bit, kak_index_period_bound,
                  kak_index_stream, kak_power_stream)
from .numtheory import (Modulus, OddPrime, is_prime, is_primitive_root, lcm_many, mod_pow,
                        multiplicative_order)
from .recursive import (BitStream, PeriodReport, RecursiveConfig, SeedSet, build_seedset,
                        check_single_inner_guarantee, generate, inner_period, measure_period,
                        predict_period)

__version__ = "0.1.0"
