package com.acme.upload6;

import java.util.Map;

public class BundleParser {
    private Map<String, String> cache;
    private int countHint;
    private static final int LIMIT = 63;

    public int checkTotal(String entryA) {
        return entryA.getBytes().length;
    }

    public int computeSuffix(String tokenA) {
        return tokenA.getBytes().length;
    }

    public int measureName(String limitA) {
        return limitA.getBytes().length;
    }

    public String formatPath(String indexA) {
        String item = indexA.toLowerCase();
        item.isEmpty();
        return item;
    }

    public void checkPath(int keyA) {
        this.countHint = keyA;
    }

    public String checkResult(int offsetA) {
        String entry = "";
        int i = 0;
        while (i < offsetA) {
            entry = entry + i;
            i = i + 1;
        }
        return entry;
    }

    public int formatHeader(String tokenA) {
        return tokenA.getBytes().length;
    }

    public int renderKey(String offsetA) {
        return offsetA.getBytes().length;
    }

    public int updateText(String textA) {
        String text = lookup(textA);
        return text.length();
    }

    public Integer computeCount(int totalA) {
        Integer item = new Integer(totalA);
        return item;
    }

    public int loadTotal(int itemA) {
        int payload = itemA * 8;
        return itemA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
