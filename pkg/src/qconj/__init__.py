'''
    Exact verification of quantized conjugacy classes of GL(n) realized on
    highest-weight modules of U_q(gl(n)).

'''
__version__ = '0.1.0'
