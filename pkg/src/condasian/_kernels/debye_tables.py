"""Debye polynomial coefficient tables for uniform large-order Bessel asymptotics.

DEBYE_U[k] holds the coefficients of u_k(p) from highest power (p**(3k)) down
to the constant term, for use with a Horner evaluation.  Generated once from
the recurrence

    u_{k+1}(p) = p^2 (1 - p^2) u_k'(p) / 2 + (1/8) int_0^p (1 - 5 t^2) u_k(t) dt
"""

DEBYE_U = [
    [1.0],
    [-0.20833333333333334, 0.0, 0.125, 0.0],
    [0.3342013888888889, 0.0, -0.4010416666666667, 0.0, 0.0703125, 0.0, 0.0],
    [-1.0258125964506173, 0.0, 1.8464626736111112, 0.0, -0.8912109375, 0.0, 0.0732421875, 0.0, 0.0, 0.0],
    [4.669584423426247, 0.0, -11.207002616222994, 0.0, 8.78912353515625, 0.0, -2.3640869140625, 0.0, 0.112152099609375, 0.0, 0.0, 0.0, 0.0],
    [-28.212072558200244, 0.0, 84.63621767460073, 0.0, -91.81824154324002, 0.0, 42.53499874538846, 0.0, -7.368794359479632, 0.0, 0.22710800170898438, 0.0, 0.0, 0.0, 0.0, 0.0],
    [212.57013003921713, 0.0, -765.2524681411817, 0.0, 1059.9904525279999, 0.0, -699.5796273761325, 0.0, 218.1905117442116, 0.0, -26.491430486951554, 0.0, 0.5725014209747314, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-1919.457662318407, 0.0, 8061.722181737309, 0.0, -13586.550006434138, 0.0, 11655.393336864534, 0.0, -5305.646978613403, 0.0, 1200.9029132163525, 0.0, -108.09091978839466, 0.0, 1.7277275025844574, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [20204.29133096615, 0.0, -96980.59838863752, 0.0, 192547.00123253153, 0.0, -203400.17728041555, 0.0, 122200.46498301746, 0.0, -41192.65496889755, 0.0, 7109.514302489364, 0.0, -493.915304773088, 0.0, 6.074042001273483, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [-242919.18790055133, 0.0, 1311763.6146629772, 0.0, -2998015.9185381066, 0.0, 3763271.297656404, 0.0, -2813563.226586534, 0.0, 1268365.2733216248, 0.0, -331645.1724845636, 0.0, 45218.76898136273, 0.0, -2499.8304818112097, 0.0, 24.380529699556064, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3284469.853072038, 0.0, -19706819.118432228, 0.0, 50952602.49266464, 0.0, -74105148.21153265, 0.0, 66344512.27472903, 0.0, -37567176.66076335, 0.0, 13288767.166421818, 0.0, -2785618.1280864547, 0.0, 308186.4046126624, 0.0, -13886.08975371704, 0.0, 110.01714026924674, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
]
