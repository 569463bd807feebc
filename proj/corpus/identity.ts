; identity loop over one variable
(declare-var x Int)
(init (= x 0))
(trans (= x' x))
(good (>= x 0))
