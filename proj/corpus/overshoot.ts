; steps of two overshoot the bound
(declare-var x Int)
(init (= x 0))
(trans (and (< x 5) (= x' (+ x 2))))
(good (<= x 5))
