public class TwoClusters {
    private double numerator;
    private double denominator;
    private String label;

    public double ratio() {
        return numerator / denominator;
    }

    public double inverse() {
        return denominator / numerator;
    }

    public String describe() {
        return label;
    }
}
