from qhdtw.qhdtw import TravelingWave
